#pragma once

#include <string_view>
#include <vector>

#include "spreadlab/polynomial.hpp"

namespace spreadlab {

/// Parses text such as "y^2 - x*z" or "3*(x+y)^2 - 1" relative to `ring`.
/// Throws ParseError on unknown identifiers or malformed input.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

/// Comma-separated polynomial list, e.g. "x^2, x*y".
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const Ring& ring);

}  // namespace spreadlab
