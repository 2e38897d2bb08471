#include "curvette/poly.hpp"

#include <sstream>

namespace curvette {

Poly Poly::constant(std::vector<std::string> vars, RatFn c) {
    Poly p(std::move(vars));
    p.add_term(Exps(p.arity(), 0), c);
    return p;
}

Poly Poly::variable(std::vector<std::string> vars, size_t index) {
    Poly p(std::move(vars));
    if (index >= p.arity())
        throw math_error(errc::unknown_variable, "variable index out of range");
    Exps e(p.arity(), 0);
    e[index] = 1;
    p.add_term(e, RatFn(1));
    return p;
}

Poly Poly::monomial(std::vector<std::string> vars, Exps e, RatFn c) {
    Poly p(std::move(vars));
    if (e.size() != p.arity())
        throw math_error(errc::arity_mismatch, "exponent vector arity mismatch");
    p.add_term(e, c);
    return p;
}

void Poly::add_term(const Exps& e, const RatFn& c) {
    if (e.size() != arity())
        throw math_error(errc::arity_mismatch, "exponent vector arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Poly::check_same_ring(const Poly& a, const Poly& b) {
    if (a.vars_ != b.vars_)
        throw math_error(errc::arity_mismatch, "polynomials over different variable lists");
}

Poly Poly::operator-() const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly::check_same_ring(a, b);
    Poly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    Poly::check_same_ring(a, b);
    Poly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exps e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::scaled(const RatFn& c) const {
    Poly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly acc = Poly::constant(vars_, RatFn(1));
    Poly base = *this;
    while (e) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (images.size() != arity())
        throw math_error(errc::arity_mismatch, "substitution image count mismatch");
    for (size_t i = 1; i < images.size(); ++i) check_same_ring(images[0], images[i]);
    std::vector<std::string> tvars =
        images.empty() ? vars_ : images[0].vars();
    Poly r(tvars);
    for (const auto& [e, c] : terms_) {
        Poly term = Poly::constant(tvars, c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * images[i].pow(static_cast<unsigned>(e[i]));
        r = r + term;
    }
    return r;
}

std::optional<long> Poly::order_at_origin() const {
    std::optional<long> best;
    for (const auto& [e, c] : terms_) {
        long d = 0;
        for (int x : e) d += x;
        if (!best || d < *best) best = d;
    }
    return best;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string cs = c.to_string();
        bool negated = false;
        if (!first && !cs.empty() && cs[0] == '-' && cs.find_first_of("+- ", 1) == std::string::npos) {
            negated = true;
            cs = cs.substr(1);
        }
        if (!first) os << (negated ? " - " : " + ");
        first = false;
        bool has_var = false;
        std::ostringstream mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (has_var) mono << "*";
            mono << vars_[i];
            if (e[i] > 1) mono << "^" << e[i];
            has_var = true;
        }
        bool coeff_is_one = (c == RatFn(1)) || (negated && cs == "1");
        if (!has_var) {
            os << cs;
        } else if (coeff_is_one) {
            os << mono.str();
        } else {
            if (cs.find_first_of("+-/ ", 1) != std::string::npos && cs[0] != '(')
                cs = "(" + cs + ")";
            os << cs << "*" << mono.str();
        }
    }
    return os.str();
}

} // namespace curvette
