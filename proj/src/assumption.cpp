#include "curvette/assumption.hpp"

namespace curvette {

std::string ParamAssumption::to_string() const {
    if (kind == Kind::ExactValue) return "u = " + value.to_string();
    if (!lo && !hi) return "u unconstrained";
    if (lo && hi) return lo->to_string() + " < u < " + hi->to_string();
    if (lo) return "u > " + lo->to_string();
    return "u < " + hi->to_string();
}

namespace {

// Strip the (at most simple, after square_free_part) roots sitting exactly
// at a finite endpoint; they do not affect signs on the open interval.
UPoly deflate_endpoint(UPoly p, const std::optional<Rat>& e) {
    if (!e || p.degree() <= 0) return p;
    if (!p.evaluate(*e).is_zero()) return p;
    UPoly lin(std::vector<Rat>{-*e, Rat(1)});
    UPoly q, r;
    UPoly::divmod(p, lin, q, r);
    return q;
}

// Distinct roots of p strictly inside the open interval.
int interior_roots(const UPoly& p, const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
    UPoly q = p.square_free_part();
    q = deflate_endpoint(std::move(q), lo);
    q = deflate_endpoint(std::move(q), hi);
    if (q.degree() <= 0) return 0;
    return sturm_count_open(q, lo, hi);
}

Rat sample_point(const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
    if (lo && hi) return (*lo + *hi) / Rat(2);
    if (lo) return *lo + Rat(1);
    if (hi) return *hi - Rat(1);
    return Rat(0);
}

} // namespace

int sign_under(const RatFn& f, const ParamAssumption& a) {
    if (f.is_zero()) return 0;
    if (a.kind == ParamAssumption::Kind::ExactValue) return f.evaluate(a.value).sign();

    if (interior_roots(f.den(), a.lo, a.hi) > 0)
        throw math_error(errc::pole_in_interval,
                         "denominator vanishes inside the assumed interval");
    if (interior_roots(f.num(), a.lo, a.hi) > 0)
        throw math_error(errc::ambiguous_sign,
                         "sign of " + f.to_string() + " is not constant on " + a.to_string());

    // No interior roots of either part: any interior sample decides.
    Rat x = sample_point(a.lo, a.hi);
    Rat d = f.den().evaluate(x);
    Rat n = f.num().evaluate(x);
    if (d.is_zero() || n.is_zero())
        throw math_error(errc::invariant_violation, "interior sample hit a root");
    return n.sign() * d.sign();
}

} // namespace curvette
