#include "sidon/constructions.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace sidon {

GapStats gap_stats(const RationalSet& a) {
    if (a.size() < 2) {
        throw std::invalid_argument("gap_stats: need at least two elements");
    }
    // Elements are sorted, so the smallest gap is between neighbours and the
    // largest is the span.
    const auto& elements = a.elements();
    Rational min_gap = elements[1] - elements[0];
    for (std::size_t i = 2; i < elements.size(); ++i) {
        Rational gap = elements[i] - elements[i - 1];
        if (gap < min_gap) min_gap = gap;
    }
    return GapStats{std::move(min_gap), elements.back() - elements.front()};
}

LinearForm growth_form(const RationalSet& a, std::size_t arity) {
    if (arity < 2) {
        throw std::invalid_argument("growth_form: arity must be at least 2");
    }
    const GapStats gaps = gap_stats(a);
    const Rational spread = gaps.max_gap / gaps.min_gap;

    std::vector<Rational> coefficients{Rational(1)};
    Rational coefficient_sum(1);
    while (coefficients.size() < arity) {
        // Smallest integer strictly above spread * (sum of earlier coefficients).
        Rational next(floor_to_integer(spread * coefficient_sum) + 1);
        coefficients.push_back(next);
        coefficient_sum += next;
    }
    return LinearForm(std::move(coefficients));
}

LinearForm g_adic_form(const RationalSet& a, std::size_t arity, std::optional<mpz_class> base) {
    if (a.empty()) {
        throw std::invalid_argument("g_adic_form: set must be nonempty");
    }
    if (arity < 2) {
        throw std::invalid_argument("g_adic_form: arity must be at least 2");
    }
    for (const Rational& x : a) {
        if (x.get_den() != 1 || x <= 0) {
            throw std::domain_error("g_adic_form: set elements must be positive integers");
        }
    }
    const mpz_class largest = a.elements().back().get_num();
    const mpz_class radix = base.value_or(largest + 1);
    if (radix <= largest) {
        throw std::invalid_argument("g_adic_form: base must exceed the largest element");
    }

    std::vector<Rational> coefficients;
    coefficients.reserve(arity);
    Rational power(1);
    for (std::size_t i = 0; i < arity; ++i) {
        coefficients.push_back(power);
        power *= radix;
    }
    return LinearForm(std::move(coefficients));
}

}  // namespace sidon
