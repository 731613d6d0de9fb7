#include "sidon/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace sidon {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (unsigned char ch : s) {
        if (!std::isdigit(ch)) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view token) {
    std::string_view body = token;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }

    std::string_view numerator = body;
    std::string_view denominator = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        numerator = body.substr(0, slash);
        denominator = body.substr(slash + 1);
    }

    if (!all_digits(numerator) || !all_digits(denominator)) {
        throw std::invalid_argument("invalid rational '" + std::string(token) + "'");
    }

    mpz_class den{std::string(denominator)};
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(token) + "'");
    }
    mpz_class num{std::string(numerator)};
    if (negative) num = -num;

    Rational value(num, den);
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

mpz_class floor_to_integer(const Rational& value) {
    mpz_class quotient;
    mpz_fdiv_q(quotient.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return quotient;
}

}  // namespace sidon
