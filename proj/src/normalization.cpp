#include "sidon/normalization.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace sidon {

AffineMap::AffineMap(Rational scale, Rational offset)
    : scale_(std::move(scale)), offset_(std::move(offset)) {
    if (scale_ == 0) {
        throw std::invalid_argument("affine map scale must be nonzero");
    }
}

Rational AffineMap::apply(const Rational& value) const {
    return scale_ * value + offset_;
}

MonicReduction to_monic(const LinearForm& form) {
    const Rational leading = form.coefficients().front();
    std::vector<Rational> reduced;
    reduced.reserve(form.arity());
    for (const Rational& c : form.coefficients()) {
        reduced.push_back(c / leading);
    }
    return MonicReduction{LinearForm(std::move(reduced)), leading};
}

NormalizedSet normalize_set(const RationalSet& a, const Rational& anchor0, const Rational& anchor1) {
    if (anchor0 == anchor1) {
        throw std::invalid_argument("normalize_set: anchors must be distinct");
    }
    if (!a.contains(anchor0) || !a.contains(anchor1)) {
        throw std::invalid_argument("normalize_set: anchors must belong to the set");
    }
    const Rational span = anchor1 - anchor0;
    std::vector<Rational> mapped;
    mapped.reserve(a.size());
    for (const Rational& x : a) {
        mapped.push_back((x - anchor0) / span);
    }
    return NormalizedSet{RationalSet(std::move(mapped)), AffineMap(span, anchor0)};
}

NormalizedSet normalize_set(const RationalSet& a) {
    if (a.size() < 2) {
        throw std::invalid_argument("normalize_set: need at least two elements");
    }
    return normalize_set(a, a.elements()[0], a.elements()[1]);
}

RationalSet apply_affine(const AffineMap& map, const RationalSet& a) {
    std::vector<Rational> mapped;
    mapped.reserve(a.size());
    for (const Rational& x : a) {
        mapped.push_back(map.apply(x));
    }
    return RationalSet(std::move(mapped));
}

}  // namespace sidon
