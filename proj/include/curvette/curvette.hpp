/*
 * curvette.hpp
 * Points of the real spectrum represented by curvettes: one truncated series
 * in t per ring variable, a parameter assumption, and the sign of t. The
 * t-adic order of substituted series defines the point's valuation; the sign
 * of the leading coefficient (adjusted by the t-sign parity) defines signs.
 */
#pragma once

#include <string>
#include <vector>

#include "curvette/assumption.hpp"
#include "curvette/series.hpp"

namespace curvette {

struct InitialForm {
    Rat value;
    RatFn lead; // nonzero
};

class Curvette {
public:
    Curvette() = default;
    Curvette(std::vector<std::string> vars, std::vector<TruncSeries> series,
             ParamAssumption param, int t_sign = +1);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<TruncSeries>& series() const { return series_; }
    const TruncSeries& series_of(size_t i) const { return series_.at(i); }
    const ParamAssumption& param() const { return param_; }
    int t_sign() const { return t_sign_; }

    // Smallest reliability bound among the variable series.
    Rat truncation() const;

    // New curvette with u replaced by an exact rational value everywhere.
    Curvette specialized(const Rat& u) const;

    // New curvette with variable i's series replaced (used by preparation
    // and blowups).
    Curvette with_series(size_t i, TruncSeries s) const;

    bool same_point_as(const Curvette& o) const;

private:
    std::vector<std::string> vars_;
    std::vector<TruncSeries> series_;
    ParamAssumption param_ = ParamAssumption::whole_line();
    int t_sign_ = +1;
};

// t-adic value of f along the curvette; zero-to-truncation is an explicit
// outcome, never conflated with exact zero.
SeriesOrder nu_value(const Curvette& c, const Poly& f);

// Leading (value, coefficient) pair; errors value-unknown when the series is
// zero up to its truncation.
InitialForm initial_form(const Curvette& c, const Poly& f);

// Sign of f at the point: sign of the lead under the parameter assumption,
// times t_sign^(leading exponent) when t_sign is negative. Exact zero input
// gives 0. Fractional leading exponents with even reduced denominator are
// rejected when t_sign is negative.
int sign_at(const Curvette& c, const Poly& f);

struct MonomialValuation {
    std::vector<std::string> vars;
    std::vector<Rat> weights; // all > 0

    MonomialValuation(std::vector<std::string> v, std::vector<Rat> w);
};

// Minimal weighted degree over the support of f; nullopt (infinity) for 0.
std::optional<Rat> monomial_value(const MonomialValuation& m, const Poly& f);

} // namespace curvette
