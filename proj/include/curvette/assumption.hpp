/*
 * assumption.hpp
 * Parameter assumptions (exact value or open interval) and the sign oracle
 * for rational functions under them.
 */
#pragma once

#include <optional>
#include <string>

#include "curvette/ratfn.hpp"

namespace curvette {

struct ParamAssumption {
    enum class Kind { ExactValue, OpenInterval };

    Kind kind = Kind::OpenInterval;
    Rat value;               // ExactValue only
    std::optional<Rat> lo;   // OpenInterval; nullopt = -oo
    std::optional<Rat> hi;   // OpenInterval; nullopt = +oo

    static ParamAssumption exact(Rat v) {
        ParamAssumption a;
        a.kind = Kind::ExactValue;
        a.value = std::move(v);
        return a;
    }
    static ParamAssumption interval(std::optional<Rat> lo, std::optional<Rat> hi) {
        if (lo && hi && !(*lo < *hi))
            throw math_error(errc::invariant_violation, "empty parameter interval");
        ParamAssumption a;
        a.kind = Kind::OpenInterval;
        a.lo = std::move(lo);
        a.hi = std::move(hi);
        return a;
    }
    static ParamAssumption whole_line() { return interval(std::nullopt, std::nullopt); }

    bool operator==(const ParamAssumption&) const = default;

    std::string to_string() const;
};

// Constant sign of f on the assumed set: +1, -1 or 0. Exact values are
// evaluated; intervals are decided by Sturm root counting of numerator and
// denominator on the open interval. Errors: ambiguous-sign when f vanishes
// somewhere inside the interval, pole-in-interval when the denominator does.
int sign_under(const RatFn& f, const ParamAssumption& a);

} // namespace curvette
