#pragma once

#include "sidon/core.hpp"
#include "sidon/rational.hpp"

namespace sidon {

/// Invertible map x -> scale*x + offset, scale != 0.
class AffineMap {
public:
    AffineMap(Rational scale, Rational offset);

    const Rational& scale() const { return scale_; }
    const Rational& offset() const { return offset_; }
    Rational apply(const Rational& value) const;

    friend bool operator==(const AffineMap&, const AffineMap&) = default;

private:
    Rational scale_;
    Rational offset_;
};

struct MonicReduction {
    LinearForm form;   // leading coefficient 1, other coefficients divided through
    Rational leading;  // original c_1; image(original, A) = leading * image(form, A)
};

MonicReduction to_monic(const LinearForm& form);

struct NormalizedSet {
    RationalSet set;        // contains 0 and 1, same cardinality as the input
    AffineMap to_original;  // applying it to `set` recovers the input set
};

// Sends anchor0 to 0 and anchor1 to 1; both anchors must be distinct elements of a.
NormalizedSet normalize_set(const RationalSet& a, const Rational& anchor0, const Rational& anchor1);

// Anchors default to the two smallest elements, so the result is deterministic.
NormalizedSet normalize_set(const RationalSet& a);

RationalSet apply_affine(const AffineMap& map, const RationalSet& a);

}  // namespace sidon
