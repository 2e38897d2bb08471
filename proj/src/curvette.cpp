#include "curvette/curvette.hpp"

namespace curvette {

Curvette::Curvette(std::vector<std::string> vars, std::vector<TruncSeries> series,
                   ParamAssumption param, int t_sign)
    : vars_(std::move(vars)), series_(std::move(series)), param_(std::move(param)),
      t_sign_(t_sign) {
    if (vars_.size() != series_.size())
        throw math_error(errc::arity_mismatch, "one series per variable required");
    if (t_sign_ != 1 && t_sign_ != -1)
        throw math_error(errc::invariant_violation, "t sign must be + or -");
    for (size_t i = 0; i < series_.size(); ++i) {
        const auto& s = series_[i];
        if (s.has_terms() && !(s.terms().begin()->first > Rat(0)))
            throw math_error(errc::invariant_violation,
                             "series for " + vars_[i] + " must have strictly positive order");
    }
}

Rat Curvette::truncation() const {
    std::optional<Rat> b;
    for (const auto& s : series_)
        if (s.bound() && (!b || *s.bound() < *b)) b = s.bound();
    if (!b)
        throw math_error(errc::invariant_violation, "curvette has no finite truncation");
    return *b;
}

Curvette Curvette::specialized(const Rat& u) const {
    std::vector<TruncSeries> out;
    out.reserve(series_.size());
    for (const auto& s : series_) {
        TruncSeries t(s.bound());
        for (const auto& [e, c] : s.terms()) t.add_term(e, RatFn(c.evaluate(u)));
        out.push_back(std::move(t));
    }
    return Curvette(vars_, std::move(out), ParamAssumption::exact(u), t_sign_);
}

Curvette Curvette::with_series(size_t i, TruncSeries s) const {
    Curvette c = *this;
    c.series_.at(i) = std::move(s);
    return c;
}

bool Curvette::same_point_as(const Curvette& o) const {
    if (vars_ != o.vars_ || t_sign_ != o.t_sign_ || !(param_ == o.param_)) return false;
    for (size_t i = 0; i < series_.size(); ++i)
        if (!series_[i].identical(o.series_[i])) return false;
    return true;
}

SeriesOrder nu_value(const Curvette& c, const Poly& f) {
    if (f.vars() != c.vars())
        throw math_error(errc::arity_mismatch, "polynomial over different variables");
    return series_substitute(f, c.series()).order();
}

InitialForm initial_form(const Curvette& c, const Poly& f) {
    if (f.vars() != c.vars())
        throw math_error(errc::arity_mismatch, "polynomial over different variables");
    TruncSeries s = series_substitute(f, c.series());
    if (!s.has_terms())
        throw math_error(errc::value_unknown,
                         "value of " + f.to_string() + " is unknown at this truncation");
    return InitialForm{s.lead_exp(), s.lead()};
}

int sign_at(const Curvette& c, const Poly& f) {
    if (f.is_zero()) return 0;
    InitialForm in = initial_form(c, f);
    int s = sign_under(in.lead, c.param());
    if (c.t_sign() < 0) {
        // t^(p/q) with t < 0 needs q odd; the sign flips exactly when p is odd.
        const Rat& e = in.value;
        mpz_class den = e.den();
        if (mpz_even_p(den.get_mpz_t()))
            throw math_error(errc::invariant_violation,
                             "sign of t^" + e.to_string() + " with negative t is undefined");
        mpz_class num = e.num();
        if (mpz_odd_p(num.get_mpz_t())) s = -s;
    }
    return s;
}

MonomialValuation::MonomialValuation(std::vector<std::string> v, std::vector<Rat> w)
    : vars(std::move(v)), weights(std::move(w)) {
    if (vars.size() != weights.size())
        throw math_error(errc::arity_mismatch, "one weight per variable required");
    for (const auto& b : weights)
        if (!(b > Rat(0)))
            throw math_error(errc::invariant_violation, "monomial weights must be positive");
}

std::optional<Rat> monomial_value(const MonomialValuation& m, const Poly& f) {
    if (f.vars() != m.vars)
        throw math_error(errc::arity_mismatch, "polynomial over different variables");
    std::optional<Rat> best;
    for (const auto& [e, c] : f.terms()) {
        Rat d(0);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) d += m.weights[i] * Rat(e[i]);
        if (!best || d < *best) best = d;
    }
    return best;
}

} // namespace curvette
