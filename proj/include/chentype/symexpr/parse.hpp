#pragma once

#include "chentype/symexpr/expr.hpp"

#include <string_view>

namespace chentype {

/// Reads the infix syntax printed by to_string: + - * / ^ (integer
/// exponents), parentheses, decimal or fractional constants, and the names
/// cos(phi), sin(phi), delta, r, kappa, tau with derivative marks (kappa'',
/// or kappa_4). Throws ParseError.
Expr parse_expr(std::string_view text);

} // namespace chentype
