/*
 * series.hpp
 * Truncated power series in t with RatFn coefficients and rational exponents.
 * Every series carries an exclusive reliability bound: coefficients of
 * exponents >= bound are unknown. A missing bound means the series is exact.
 *
 * Bound arithmetic: sums take the min of the bounds; a product of series
 * with bounds N1, N2 and orders o1, o2 is reliable below min(N1+o2, N2+o1)
 * (an empty series contributes its bound as the order). Without this rule,
 * high-order cancellations would silently lie.
 */
#pragma once

#include <map>
#include <optional>
#include <string>

#include "curvette/poly.hpp"

namespace curvette {

// Order of a series: least exponent with nonzero coefficient, or
// zero-to-truncation when no term is stored below the bound.
struct SeriesOrder {
    std::optional<Rat> value; // nullopt = zero up to the truncation bound
    bool known() const { return value.has_value(); }
    std::string to_string() const {
        return known() ? value->to_string() : std::string("zero-to-truncation");
    }
};

class TruncSeries {
public:
    TruncSeries() = default;
    explicit TruncSeries(std::optional<Rat> bound) : bound_(std::move(bound)) {}

    static TruncSeries zero(std::optional<Rat> bound) { return TruncSeries(std::move(bound)); }
    static TruncSeries term(const RatFn& c, const Rat& exp, std::optional<Rat> bound);

    const std::map<Rat, RatFn>& terms() const { return terms_; }
    const std::optional<Rat>& bound() const { return bound_; }
    bool has_terms() const { return !terms_.empty(); }

    SeriesOrder order() const;
    // Coefficient of the least exponent; error value-unknown when empty.
    const RatFn& lead() const;
    const Rat& lead_exp() const;
    // Coefficient at a given exponent, must be below the bound.
    RatFn coeff(const Rat& e) const;

    void add_term(const Rat& e, const RatFn& c);

    TruncSeries operator-() const;
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    TruncSeries scaled(const RatFn& c) const;
    TruncSeries pow(unsigned e) const;

    // Quotient a/b of series with ord(a) >= ord(b); used by blowups.
    static TruncSeries divide(const TruncSeries& a, const TruncSeries& b);

    // Same terms, bound lowered to min(bound, b).
    TruncSeries clipped(const Rat& b) const;

    bool identical(const TruncSeries& o) const {
        return terms_ == o.terms_ && bound_ == o.bound_;
    }

    std::string to_string() const;

private:
    void drop_dead_terms();
    std::map<Rat, RatFn> terms_;
    std::optional<Rat> bound_; // exclusive; nullopt = exact
};

// Image of f under variable -> series. The result bound follows the sum and
// product rules over the term images.
TruncSeries series_substitute(const Poly& f,
                              const std::vector<TruncSeries>& assignment);

} // namespace curvette
