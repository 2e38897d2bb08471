#include "curvette/series.hpp"

#include <sstream>

namespace curvette {

namespace {

std::optional<Rat> min_bound(const std::optional<Rat>& a, const std::optional<Rat>& b) {
    if (!a) return b;
    if (!b) return a;
    return *a < *b ? a : b;
}

// Order used by the product bound rule: min exponent, or the bound itself
// for a series with no visible terms (its hidden part starts there).
std::optional<Rat> rule_order(const TruncSeries& s) {
    if (s.has_terms()) return s.terms().begin()->first;
    return s.bound();
}

std::optional<Rat> sum_opt(const std::optional<Rat>& a, const std::optional<Rat>& b) {
    if (!a || !b) return std::nullopt; // anything plus "infinity"
    return *a + *b;
}

} // namespace

TruncSeries TruncSeries::term(const RatFn& c, const Rat& e, std::optional<Rat> bound) {
    TruncSeries s(std::move(bound));
    s.add_term(e, c);
    return s;
}

void TruncSeries::drop_dead_terms() {
    if (!bound_) return;
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first >= *bound_) it = terms_.erase(it);
        else ++it;
    }
}

SeriesOrder TruncSeries::order() const {
    if (terms_.empty()) return SeriesOrder{};
    return SeriesOrder{terms_.begin()->first};
}

const RatFn& TruncSeries::lead() const {
    if (terms_.empty())
        throw math_error(errc::value_unknown, "series is zero up to its truncation");
    return terms_.begin()->second;
}

const Rat& TruncSeries::lead_exp() const {
    if (terms_.empty())
        throw math_error(errc::value_unknown, "series is zero up to its truncation");
    return terms_.begin()->first;
}

RatFn TruncSeries::coeff(const Rat& e) const {
    if (bound_ && e >= *bound_)
        throw math_error(errc::truncation_exceeded,
                         "coefficient of t^" + e.to_string() + " is beyond the reliable bound");
    auto it = terms_.find(e);
    return it == terms_.end() ? RatFn() : it->second;
}

void TruncSeries::add_term(const Rat& e, const RatFn& c) {
    if (c.is_zero()) return;
    if (bound_ && e >= *bound_) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r(bound_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r(min_bound(a.bound_, b.bound_));
    r.terms_ = a.terms_;
    r.drop_dead_terms();
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    std::optional<Rat> bound;
    {
        auto oa = rule_order(a), ob = rule_order(b);
        auto na = sum_opt(a.bound_, ob); // unknown(a) * known(b)
        auto nb = sum_opt(b.bound_, oa); // known(a) * unknown(b)
        bound = min_bound(na, nb);
    }
    TruncSeries r(bound);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ea + eb, ca * cb);
    return r;
}

TruncSeries TruncSeries::scaled(const RatFn& c) const {
    TruncSeries r(bound_);
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
    return r;
}

TruncSeries TruncSeries::pow(unsigned e) const {
    if (e == 0) return TruncSeries::term(RatFn(1), Rat(0), std::nullopt);
    TruncSeries acc = *this;
    TruncSeries base = *this;
    --e;
    while (e) {
        if (e & 1u) acc = acc * base;
        base = e > 1 ? base * base : base;
        e >>= 1u;
    }
    return acc;
}

TruncSeries TruncSeries::divide(const TruncSeries& a, const TruncSeries& b) {
    if (!b.has_terms())
        throw math_error(errc::value_unknown, "division by a series that is zero up to truncation");
    Rat ob = b.terms().begin()->first;
    // Reliability of a/b: min(Na - ob, oa + Nb - 2*ob).
    std::optional<Rat> bound;
    {
        std::optional<Rat> n1, n2;
        if (a.bound_) n1 = *a.bound_ - ob;
        auto oa = rule_order(a);
        if (b.bound_ && oa) n2 = *oa + *b.bound_ - ob - ob;
        else if (b.bound_ && !oa) n2 = std::nullopt; // a is exactly zero
        bound = min_bound(n1, n2);
    }
    if (!a.has_terms()) return TruncSeries::zero(bound);
    Rat oa = a.terms().begin()->first;
    if (oa < ob)
        throw math_error(errc::invariant_violation,
                         "series quotient would have a pole (order " + oa.to_string() +
                             " / order " + ob.to_string() + ")");
    TruncSeries rem = a;
    if (bound) rem = rem.clipped(*bound + ob); // quotient terms at e come from rem at e+ob
    TruncSeries q(bound);
    const RatFn& blead = b.terms().begin()->second;
    size_t guard = 0;
    while (rem.has_terms()) {
        Rat e = rem.terms().begin()->first - ob;
        if (bound && e >= *bound) break;
        RatFn c = rem.terms().begin()->second / blead;
        q.add_term(e, c);
        // rem -= c * t^e * b
        for (const auto& [eb, cb] : b.terms()) rem.add_term(e + eb, -(c * cb));
        if (++guard > 100000)
            throw math_error(errc::non_terminating_guard, "series division budget exceeded");
    }
    return q;
}

TruncSeries TruncSeries::clipped(const Rat& b) const {
    TruncSeries r = *this;
    r.bound_ = min_bound(r.bound_, b);
    r.drop_dead_terms();
    return r;
}

std::string TruncSeries::to_string() const {
    std::ostringstream os;
    if (terms_.empty()) {
        os << "0";
    } else {
        bool first = true;
        for (const auto& [e, c] : terms_) {
            std::string cs = c.to_string();
            bool neg = !cs.empty() && cs[0] == '-' &&
                       cs.find_first_of("+- ", 1) == std::string::npos;
            if (!first) {
                os << (neg ? " - " : " + ");
                if (neg) cs = cs.substr(1);
            }
            first = false;
            bool needs_paren = cs.find_first_of("+- /", 1) != std::string::npos && cs[0] != '(';
            if (e.is_zero()) {
                os << (needs_paren ? "(" + cs + ")" : cs);
                continue;
            }
            if (cs == "1") {
                os << "t";
            } else {
                os << (needs_paren ? "(" + cs + ")" : cs) << "*t";
            }
            if (!(e == Rat(1))) os << "^" << e.to_string();
        }
    }
    if (bound_) os << " + O(t^" << bound_->to_string() << ")";
    return os.str();
}

TruncSeries series_substitute(const Poly& f, const std::vector<TruncSeries>& assignment) {
    if (assignment.size() != f.arity())
        throw math_error(errc::arity_mismatch, "series substitution image count mismatch");

    // Powers are shared across the terms of f.
    std::vector<std::vector<TruncSeries>> powers(assignment.size());
    auto power = [&](size_t i, int e) -> const TruncSeries& {
        auto& v = powers[i];
        if (v.empty()) v.push_back(assignment[i]);
        while (static_cast<int>(v.size()) < e) v.push_back(v.back() * assignment[i]);
        return v[static_cast<size_t>(e) - 1];
    };

    // Start from an exact zero; each term clips the bound per the rules.
    TruncSeries acc(std::nullopt);
    bool bound_seeded = false;
    for (const auto& [e, c] : f.terms()) {
        TruncSeries term = TruncSeries::term(c, Rat(0), std::nullopt);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * power(i, e[i]);
        acc = acc + term;
        bound_seeded = true;
    }
    if (!bound_seeded) {
        // Zero polynomial: report the shared truncation policy of the inputs.
        std::optional<Rat> b;
        for (const auto& s : assignment) b = min_bound(b, s.bound());
        return TruncSeries::zero(b);
    }
    return acc;
}

} // namespace curvette
