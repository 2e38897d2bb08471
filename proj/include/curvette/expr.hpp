/*
 * expr.hpp
 * Recursive-descent parser for the textual polynomial syntax used by the CLI
 * and session files: `y^2 - x*z`, coefficients as rational-function literals
 * like `(2*u-1)/(u+1)`. Exactly one symbolic parameter `u` is supported;
 * other unknown identifiers are rejected.
 */
#pragma once

#include <string>
#include <vector>

#include "curvette/poly.hpp"
#include "curvette/series.hpp"

namespace curvette {

// Parse an expression over the given ring variables; `u` is the coefficient
// parameter. Division is only defined by coefficient (variable-free)
// subexpressions. Errors carry a 1-based column in the message.
Poly parse_poly_expr(const std::string& text, const std::vector<std::string>& vars);

// Parse an expression in `t` (and the parameter u) into a truncated series
// with the given reliability bound.
TruncSeries parse_series_expr(const std::string& text, const Rat& trunc);

} // namespace curvette
