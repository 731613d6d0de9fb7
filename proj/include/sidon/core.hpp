#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "sidon/rational.hpp"

namespace sidon {

// Ceiling on the number of tuples an enumeration may visit. Operations that
// walk A^h throw std::length_error when k^h exceeds the limit.
inline constexpr std::uint64_t default_tuple_limit = 10'000'000;

/// Finite set of rationals in canonical form: strictly increasing, no duplicates.
class RationalSet {
public:
    RationalSet() = default;
    explicit RationalSet(std::vector<Rational> elements);
    explicit RationalSet(const std::set<Rational>& elements);
    RationalSet(std::initializer_list<Rational> elements);

    const std::vector<Rational>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    bool contains(const Rational& value) const;

    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

    friend bool operator==(const RationalSet&, const RationalSet&) = default;

private:
    std::vector<Rational> elements_;
};

/// Linear form c_1*x_1 + ... + c_h*x_h with nonzero rational coefficients.
class LinearForm {
public:
    explicit LinearForm(std::vector<Rational> coefficients);

    std::size_t arity() const { return coefficients_.size(); }
    const std::vector<Rational>& coefficients() const { return coefficients_; }
    bool is_monic() const;
    Rational coefficient_sum() const;
    Rational evaluate(const std::vector<Rational>& point) const;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;

private:
    std::vector<Rational> coefficients_;
};

/// How often each value of the image is hit by tuples from A^h.
struct RepresentationProfile {
    std::map<Rational, std::uint64_t> counts;
    std::size_t arity = 0;
    std::size_t set_size = 0;

    std::uint64_t max_count() const;
};

/// Two distinct tuples the form maps to the same value.
struct CollisionWitness {
    std::vector<Rational> left;
    std::vector<Rational> right;
    Rational value;
};

RationalSet dilate(const RationalSet& a, const Rational& factor);
RationalSet translate(const RationalSet& a, const Rational& shift);

// Image of A^h under the form; {0} for the empty set.
RationalSet image(const LinearForm& form, const RationalSet& a,
                  std::uint64_t tuple_limit = default_tuple_limit);

// True iff the form is one-to-one on A^h, i.e. |image| = k^h. A must be nonempty.
bool is_sidon(const LinearForm& form, const RationalSet& a,
              std::uint64_t tuple_limit = default_tuple_limit);

RepresentationProfile representation_profile(const LinearForm& form, const RationalSet& a,
                                             std::uint64_t tuple_limit = default_tuple_limit);

// True iff no value is hit by more than `order` tuples. Order 1 is is_sidon.
bool is_sidon_of_order(const LinearForm& form, const RationalSet& a, std::uint64_t order,
                       std::uint64_t tuple_limit = default_tuple_limit);

// First collision in lexicographic tuple order, nullopt when the form is Sidon on A.
std::optional<CollisionWitness> collision_witness(const LinearForm& form, const RationalSet& a,
                                                  std::uint64_t tuple_limit = default_tuple_limit);

}  // namespace sidon
