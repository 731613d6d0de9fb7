#pragma once

#include <optional>

#include "sidon/core.hpp"
#include "sidon/rational.hpp"

namespace sidon {

struct GapStats {
    Rational min_gap;  // smallest |a - a'| over distinct pairs
    Rational max_gap;  // largest |a - a'|
};

GapStats gap_stats(const RationalSet& a);

// Monic form whose coefficients grow fast enough that A is guaranteed Sidon:
// c_1 = 1 and c_j is the smallest integer exceeding (max_gap/min_gap) * sum of
// the earlier coefficients. Prefix-stable in the arity. Needs |A| >= 2, h >= 2.
LinearForm growth_form(const RationalSet& a, std::size_t arity);

// Form (1, g, g^2, ..., g^(h-1)); Sidon on any set of positive integers below
// g by uniqueness of base-g digits. Default base is max(A) + 1; a supplied
// base must exceed max(A). Needs h >= 2.
LinearForm g_adic_form(const RationalSet& a, std::size_t arity,
                       std::optional<mpz_class> base = std::nullopt);

}  // namespace sidon
