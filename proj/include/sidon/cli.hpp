#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sidon/core.hpp"

namespace sidon::cli {

// Comma-separated rational literals. Empty input parses to the empty set;
// duplicate elements are rejected.
RationalSet parse_set_literal(std::string_view source);

// Comma-separated nonzero rational coefficients, position i giving c_i.
LinearForm parse_form_literal(std::string_view source);

// Inverses of the parsers: comma-joined canonical literals.
std::string render_set_literal(const RationalSet& a);
std::string render_form_literal(const LinearForm& form);

// Command dispatch. Exit codes: 0 success, 1 parse/domain error,
// 2 internal mismatch.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sidon::cli
