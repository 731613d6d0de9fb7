#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sidon {

// Exact arbitrary-precision rational. All values are kept canonical: lowest
// terms, positive denominator, zero stored as 0/1.
using Rational = mpq_class;

// Accepts "p", "-p", "p/q" or "-p/q" with decimal digits and q > 0. Throws
// std::invalid_argument naming the offending token on anything else.
Rational parse_rational(std::string_view token);

// Lowest terms, sign on the numerator, "/1" suppressed: "2", "-3/4".
std::string to_string(const Rational& value);

// Largest integer not exceeding value.
mpz_class floor_to_integer(const Rational& value);

}  // namespace sidon
