/*
 * poly.hpp
 * Multivariate polynomials in named ring variables over the coefficient
 * field RatFn. Terms are kept in a sorted map keyed by exponent vector; no
 * zero coefficients are stored.
 */
#pragma once

#include <map>
#include <string>
#include <vector>

#include "curvette/ratfn.hpp"

namespace curvette {

using Exps = std::vector<int>;

class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Poly constant(std::vector<std::string> vars, RatFn c);
    static Poly variable(std::vector<std::string> vars, size_t index);
    static Poly monomial(std::vector<std::string> vars, Exps e, RatFn c);

    const std::vector<std::string>& vars() const { return vars_; }
    size_t arity() const { return vars_.size(); }
    const std::map<Exps, RatFn>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exps& e, const RatFn& c);

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const RatFn& c) const;
    Poly pow(unsigned e) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Composition: substitute images[i] for variable i. All images must share
    // one variable list, which becomes the result's.
    Poly substitute(const std::vector<Poly>& images) const;

    // m-adic order at the origin: minimal total degree of a term; nullopt for 0.
    std::optional<long> order_at_origin() const;

    std::string to_string() const;

private:
    static void check_same_ring(const Poly& a, const Poly& b);
    std::vector<std::string> vars_;
    std::map<Exps, RatFn> terms_;
};

} // namespace curvette
