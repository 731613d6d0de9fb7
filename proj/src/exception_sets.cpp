#include "sidon/exception_sets.hpp"

#include <stdexcept>
#include <utility>

namespace sidon {

DifferenceData difference_data(const RationalSet& a) {
    if (a.empty()) {
        throw std::invalid_argument("difference_data: set must be nonempty");
    }
    std::set<Rational> differences;
    for (const Rational& x : a) {
        for (const Rational& y : a) {
            differences.insert(x - y);
        }
    }
    std::set<Rational> quotients;
    for (const Rational& numerator : differences) {
        for (const Rational& denominator : differences) {
            if (denominator != 0) {
                quotients.insert(numerator / denominator);
            }
        }
    }
    return DifferenceData{RationalSet(differences), RationalSet(quotients)};
}

ExceptionSet binary_exception_set(const RationalSet& a) {
    if (a.size() < 2) {
        throw std::invalid_argument("binary_exception_set: need at least two elements");
    }
    // x1 + c*x2 collides on the distinct pairs (a1, b1), (a2, b2) exactly when
    // c * (b2 - b1) = a1 - a2, so the failing c are quotients of nonzero
    // differences. c = 0 (equal first coordinates) is reported via the flag.
    std::set<Rational> values;
    const auto& elements = a.elements();
    for (const Rational& a1 : elements) {
        for (const Rational& a2 : elements) {
            if (a1 == a2) continue;
            for (const Rational& b1 : elements) {
                for (const Rational& b2 : elements) {
                    if (b1 == b2) continue;
                    values.insert((a1 - a2) / (b2 - b1));
                }
            }
        }
    }
    return ExceptionSet{RationalSet(values), true};
}

RationalSet closure_of(const Rational& c) {
    if (c == 0) {
        throw std::invalid_argument("closure_of: value must be nonzero");
    }
    const Rational inverse = 1 / c;
    return RationalSet({c, -c, inverse, -inverse});
}

ExceptionSet formula_exception_set(const RationalSet& a) {
    if (!a.contains(0) || !a.contains(1)) {
        throw std::invalid_argument(
            "formula_exception_set: set must be normalized (contain 0 and 1)");
    }
    if (a.size() < 2 || a.size() > 4) {
        throw std::invalid_argument(
            "formula_exception_set: closed forms cover sets of 2 to 4 elements only");
    }

    std::set<Rational> values;
    auto add_closure = [&values](const Rational& c) {
        for (const Rational& x : closure_of(c)) values.insert(x);
    };

    add_closure(Rational(1));
    std::vector<Rational> extras;
    for (const Rational& x : a) {
        if (x != 0 && x != 1) extras.push_back(x);
    }
    for (const Rational& t : extras) {
        add_closure(t);
        add_closure(t - 1);
        add_closure((t - 1) / t);
    }
    if (extras.size() == 2) {
        const Rational& p = extras[0];
        const Rational& q = extras[1];
        add_closure(p - q);
        add_closure((p - q) / p);
        add_closure((p - q) / q);
        add_closure((p - 1) / q);
        add_closure((q - 1) / p);
        add_closure((p - 1) / (q - 1));
        add_closure((p - 1) / (p - q));
        add_closure((q - 1) / (p - q));
        add_closure(p / q);
    }
    return ExceptionSet{RationalSet(values), true};
}

HyperplaneArrangement::HyperplaneArrangement(std::size_t arity, std::set<Vector> vectors)
    : arity_(arity), vectors_(vectors.begin(), vectors.end()) {
    if (arity_ < 2) {
        throw std::invalid_argument("hyperplane arrangement arity must be at least 2");
    }
    for (const Vector& v : vectors_) {
        if (v.size() != arity_) {
            throw std::invalid_argument("hyperplane vector arity mismatch");
        }
    }
}

HyperplaneArrangement::Vector primitive_normal(const std::vector<Rational>& v) {
    mpz_class common_denominator(1);
    for (const Rational& x : v) {
        mpz_lcm(common_denominator.get_mpz_t(), common_denominator.get_mpz_t(), x.get_den_mpz_t());
    }
    HyperplaneArrangement::Vector cleared;
    cleared.reserve(v.size());
    mpz_class divisor(0);
    for (const Rational& x : v) {
        mpz_class entry = x.get_num() * (common_denominator / x.get_den());
        mpz_gcd(divisor.get_mpz_t(), divisor.get_mpz_t(), entry.get_mpz_t());
        cleared.push_back(std::move(entry));
    }
    if (divisor == 0) {
        throw std::invalid_argument("primitive_normal: zero vector");
    }
    bool flip = false;
    for (mpz_class& entry : cleared) {
        entry /= divisor;
    }
    for (const mpz_class& entry : cleared) {
        if (entry != 0) {
            flip = entry < 0;
            break;
        }
    }
    if (flip) {
        for (mpz_class& entry : cleared) entry = -entry;
    }
    return cleared;
}

HyperplaneArrangement exception_arrangement(const RationalSet& a, std::size_t arity,
                                            std::uint64_t tuple_limit) {
    if (a.size() < 2) {
        throw std::invalid_argument("exception_arrangement: need at least two elements");
    }
    if (arity < 2) {
        throw std::invalid_argument("exception_arrangement: arity must be at least 2");
    }

    const RationalSet difference_set = difference_data(a).differences;
    const std::vector<Rational>& diffs = difference_set.elements();
    if (arity >= 64) {  // |D| >= 3 here, so |D|^h tops any expressible limit
        throw std::length_error("difference-vector enumeration exceeds the limit of " +
                                std::to_string(tuple_limit));
    }
    mpz_class total;
    mpz_ui_pow_ui(total.get_mpz_t(), diffs.size(), arity);
    if (total > tuple_limit) {
        throw std::length_error("enumeration of " + total.get_str() +
                                " difference vectors exceeds the limit of " +
                                std::to_string(tuple_limit));
    }

    std::set<HyperplaneArrangement::Vector> vectors;
    std::vector<std::size_t> odometer(arity, 0);
    std::vector<Rational> candidate(arity);
    while (true) {
        bool all_zero = true;
        for (std::size_t i = 0; i < arity; ++i) {
            candidate[i] = diffs[odometer[i]];
            if (candidate[i] != 0) all_zero = false;
        }
        if (!all_zero) {
            vectors.insert(primitive_normal(candidate));
        }
        std::size_t position = arity;
        while (position > 0) {
            --position;
            if (++odometer[position] < diffs.size()) break;
            odometer[position] = 0;
            if (position == 0) return HyperplaneArrangement(arity, std::move(vectors));
        }
    }
}

bool is_sidon_via_arrangement(const LinearForm& form, const HyperplaneArrangement& arrangement) {
    if (form.arity() != arrangement.arity()) {
        throw std::invalid_argument("is_sidon_via_arrangement: arity mismatch");
    }
    for (const auto& normal : arrangement.vectors()) {
        Rational dot(0);
        for (std::size_t i = 0; i < normal.size(); ++i) {
            dot += form.coefficients()[i] * Rational(normal[i]);
        }
        if (dot == 0) return false;
    }
    return true;
}

}  // namespace sidon
