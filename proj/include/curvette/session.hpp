/*
 * session.hpp
 * Curvette session files: a line-oriented key/value + expression format.
 *
 *   # comment
 *   vars x y z
 *   trunc 64
 *   assume u > 2        (also: u < q, q < u < q', u = q; last wins)
 *   tsign +
 *   x = t^6
 *   y = t^10 + u*t^11
 *   z = t^14 + t^15
 *
 * Every declared variable needs an assignment; series must have strictly
 * positive order. Errors carry the line and column.
 */
#pragma once

#include <string>

#include "curvette/curvette.hpp"

namespace curvette {

struct SessionConfig {
    std::vector<std::string> vars;
    Curvette curvette;
    Rat truncation = Rat(64);
    ParamAssumption assumption = ParamAssumption::whole_line();
    int t_sign = +1;

    // Checked when a command requests a level (the safe-truncation rule).
    void require_level(const Rat& level) const;
};

SessionConfig parse_session(const std::string& text);
SessionConfig load_session(const std::string& path);

} // namespace curvette
