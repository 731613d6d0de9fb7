#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "sidon/core.hpp"
#include "sidon/rational.hpp"

namespace sidon {

/// Difference set A - A and the quotients d'/d of its nonzero members.
struct DifferenceData {
    RationalSet differences;
    RationalSet quotients;
};

DifferenceData difference_data(const RationalSet& a);

/// Nonzero coefficients c for which x1 + c*x2 is not one-to-one on A^2.
/// The set is closed under c -> -c and c -> 1/c.
struct ExceptionSet {
    RationalSet values;
    bool zero_collides = false;  // c = 0 also collapses distinct pairs
};

// Exact exception set, computed from the collision identity
// c * (b' - b) = a - a' over all pairs of distinct pairs from A. Needs |A| >= 2.
ExceptionSet binary_exception_set(const RationalSet& a);

// {c, -c, 1/c, -1/c}; collapses to two elements at c = +-1. Needs c != 0.
RationalSet closure_of(const Rational& c);

// Closed-form exception set for a normalized A (contains 0 and 1) with
// 2 <= |A| <= 4, assembled as a union of closure_of() orbits.
ExceptionSet formula_exception_set(const RationalSet& a);

/// Finite description of the h-ary exception locus: an h-ary form with all
/// nonzero coefficients fails on A exactly when its coefficient vector is
/// orthogonal to one of these primitive integer difference vectors.
class HyperplaneArrangement {
public:
    using Vector = std::vector<mpz_class>;

    HyperplaneArrangement(std::size_t arity, std::set<Vector> vectors);

    std::size_t arity() const { return arity_; }
    const std::vector<Vector>& vectors() const { return vectors_; }  // sorted lexicographically

    friend bool operator==(const HyperplaneArrangement&, const HyperplaneArrangement&) = default;

private:
    std::size_t arity_;
    std::vector<Vector> vectors_;
};

// Canonical representative of the hyperplane sum_i v_i*x_i = 0: denominators
// cleared, entries divided by their gcd, first nonzero entry positive.
// Throws on the zero vector.
HyperplaneArrangement::Vector primitive_normal(const std::vector<Rational>& v);

// Arrangement generated by the nonzero vectors of D(A)^h. Needs |A| >= 2, h >= 2.
HyperplaneArrangement exception_arrangement(const RationalSet& a, std::size_t arity,
                                            std::uint64_t tuple_limit = default_tuple_limit);

// True iff the coefficient vector avoids every hyperplane; agrees with
// is_sidon on the set that generated the arrangement.
bool is_sidon_via_arrangement(const LinearForm& form, const HyperplaneArrangement& arrangement);

}  // namespace sidon
