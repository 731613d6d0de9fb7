#include "sidon/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace sidon {

namespace {

void check_tuple_budget(std::size_t set_size, std::size_t arity, std::uint64_t tuple_limit) {
    if (set_size >= 2 && arity >= 64) {
        // k^h >= 2^64 already tops any expressible limit; skip the big pow.
        throw std::length_error("enumeration of " + std::to_string(set_size) + "^" +
                                std::to_string(arity) + " tuples exceeds the limit of " +
                                std::to_string(tuple_limit));
    }
    mpz_class total;
    mpz_ui_pow_ui(total.get_mpz_t(), set_size, arity);
    if (total > tuple_limit) {
        throw std::length_error("enumeration of " + total.get_str() + " tuples exceeds the limit of " +
                                std::to_string(tuple_limit));
    }
}

// Walks A^h in lexicographic index order, reusing partial sums of
// c_1*a_1 + ... along the prefix. visit(value, picks) returns false to stop.
template <typename Visit>
bool walk_tuples(const std::vector<Rational>& coefficients, const std::vector<Rational>& elements,
                 std::size_t position, std::vector<std::size_t>& picks, const Rational& prefix,
                 Visit&& visit) {
    if (position == coefficients.size()) {
        return visit(prefix, picks);
    }
    for (std::size_t i = 0; i < elements.size(); ++i) {
        picks[position] = i;
        Rational extended = prefix + coefficients[position] * elements[i];
        if (!walk_tuples(coefficients, elements, position + 1, picks, extended, visit)) {
            return false;
        }
    }
    return true;
}

template <typename Visit>
void for_each_tuple(const LinearForm& form, const RationalSet& a, std::uint64_t tuple_limit,
                    Visit&& visit) {
    check_tuple_budget(a.size(), form.arity(), tuple_limit);
    std::vector<std::size_t> picks(form.arity());
    walk_tuples(form.coefficients(), a.elements(), 0, picks, Rational(0), visit);
}

void require_nonempty(const RationalSet& a, const char* operation) {
    if (a.empty()) {
        throw std::invalid_argument(std::string(operation) + ": set must be nonempty");
    }
}

}  // namespace

RationalSet::RationalSet(std::vector<Rational> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

RationalSet::RationalSet(const std::set<Rational>& elements)
    : elements_(elements.begin(), elements.end()) {}

RationalSet::RationalSet(std::initializer_list<Rational> elements)
    : RationalSet(std::vector<Rational>(elements)) {}

bool RationalSet::contains(const Rational& value) const {
    return std::binary_search(elements_.begin(), elements_.end(), value);
}

LinearForm::LinearForm(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) {
        throw std::invalid_argument("a linear form needs at least one coefficient");
    }
    for (const Rational& c : coefficients_) {
        if (c == 0) {
            throw std::invalid_argument("linear form coefficients must be nonzero");
        }
    }
}

bool LinearForm::is_monic() const {
    return coefficients_.front() == 1;
}

Rational LinearForm::coefficient_sum() const {
    Rational sum(0);
    for (const Rational& c : coefficients_) sum += c;
    return sum;
}

Rational LinearForm::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != coefficients_.size()) {
        throw std::invalid_argument("evaluate: point arity does not match the form");
    }
    Rational value(0);
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        value += coefficients_[i] * point[i];
    }
    return value;
}

std::uint64_t RepresentationProfile::max_count() const {
    std::uint64_t best = 0;
    for (const auto& [value, count] : counts) best = std::max(best, count);
    return best;
}

RationalSet dilate(const RationalSet& a, const Rational& factor) {
    std::set<Rational> scaled;
    for (const Rational& x : a) scaled.insert(factor * x);
    return RationalSet(scaled);
}

RationalSet translate(const RationalSet& a, const Rational& shift) {
    std::vector<Rational> shifted;
    shifted.reserve(a.size());
    for (const Rational& x : a) shifted.push_back(x + shift);
    return RationalSet(std::move(shifted));
}

RationalSet image(const LinearForm& form, const RationalSet& a, std::uint64_t tuple_limit) {
    if (a.empty()) {
        return RationalSet({Rational(0)});
    }
    std::set<Rational> values;
    for_each_tuple(form, a, tuple_limit, [&](const Rational& value, const auto&) {
        values.insert(value);
        return true;
    });
    return RationalSet(values);
}

bool is_sidon(const LinearForm& form, const RationalSet& a, std::uint64_t tuple_limit) {
    require_nonempty(a, "is_sidon");
    std::set<Rational> seen;
    bool collision = false;
    for_each_tuple(form, a, tuple_limit, [&](const Rational& value, const auto&) {
        if (!seen.insert(value).second) {
            collision = true;
            return false;
        }
        return true;
    });
    return !collision;
}

RepresentationProfile representation_profile(const LinearForm& form, const RationalSet& a,
                                             std::uint64_t tuple_limit) {
    require_nonempty(a, "representation_profile");
    RepresentationProfile profile;
    profile.arity = form.arity();
    profile.set_size = a.size();
    for_each_tuple(form, a, tuple_limit, [&](const Rational& value, const auto&) {
        ++profile.counts[value];
        return true;
    });
    return profile;
}

bool is_sidon_of_order(const LinearForm& form, const RationalSet& a, std::uint64_t order,
                       std::uint64_t tuple_limit) {
    require_nonempty(a, "is_sidon_of_order");
    if (order < 1) {
        throw std::invalid_argument("is_sidon_of_order: order must be at least 1");
    }
    std::map<Rational, std::uint64_t> counts;
    bool exceeded = false;
    for_each_tuple(form, a, tuple_limit, [&](const Rational& value, const auto&) {
        if (++counts[value] > order) {
            exceeded = true;
            return false;
        }
        return true;
    });
    return !exceeded;
}

std::optional<CollisionWitness> collision_witness(const LinearForm& form, const RationalSet& a,
                                                  std::uint64_t tuple_limit) {
    require_nonempty(a, "collision_witness");
    const auto& elements = a.elements();
    auto materialize = [&](const std::vector<std::size_t>& picks) {
        std::vector<Rational> tuple;
        tuple.reserve(picks.size());
        for (std::size_t index : picks) tuple.push_back(elements[index]);
        return tuple;
    };

    std::map<Rational, std::vector<std::size_t>> first_tuple;
    std::optional<CollisionWitness> witness;
    for_each_tuple(form, a, tuple_limit, [&](const Rational& value, const std::vector<std::size_t>& picks) {
        auto [slot, inserted] = first_tuple.try_emplace(value, picks);
        if (!inserted) {
            witness = CollisionWitness{materialize(slot->second), materialize(picks), value};
            return false;
        }
        return true;
    });
    return witness;
}

}  // namespace sidon
