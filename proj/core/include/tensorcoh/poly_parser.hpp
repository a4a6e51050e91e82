#pragma once

#include <string_view>

#include "tensorcoh/polynomial.hpp"

namespace tensorcoh {

/// Parses sums of products of integers, variables, powers and parenthesised expressions.
/// Throws ParseError with the offending column (0-based) on failure.
Polynomial parse_polynomial(const AmbientPtr& ring, std::string_view text);

}  // namespace tensorcoh
