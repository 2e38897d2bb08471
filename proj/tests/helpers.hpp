/*
 * helpers.hpp
 * Shared fixtures for the test binaries: quick curvette construction and the
 * standard three-variable example used throughout.
 */
#pragma once

#include <random>
#include <string>
#include <vector>

#include "curvette/expr.hpp"
#include "curvette/roots.hpp"

namespace curvette::testing {

inline Curvette make_curvette(const std::vector<std::string>& vars,
                              const std::vector<std::string>& series, long trunc = 64,
                              ParamAssumption pa = ParamAssumption::whole_line(),
                              int t_sign = +1) {
    std::vector<TruncSeries> ss;
    for (const auto& s : series) ss.push_back(parse_series_expr(s, Rat(trunc)));
    return Curvette(vars, std::move(ss), std::move(pa), t_sign);
}

// The running example: x = t^6, y = t^10 + u t^11, z = t^14 + t^15, u > 2.
inline Curvette space_curve(long trunc = 80) {
    return make_curvette({"x", "y", "z"}, {"t^6", "t^10 + u*t^11", "t^14 + t^15"}, trunc,
                         ParamAssumption::interval(Rat(2), std::nullopt));
}

inline RootSystem space_curve_roots(long level = 35, long trunc = 80) {
    Curvette c = space_curve(trunc);
    return roots_up_to(prepare_coordinates(c, Rat(level)).curvette, Rat(level));
}

inline Rat random_rat(std::mt19937& rng, long lo, long hi, long den_max = 1) {
    std::uniform_int_distribution<long> num(lo, hi);
    std::uniform_int_distribution<long> den(1, den_max);
    return Rat(num(rng), den(rng));
}

} // namespace curvette::testing
