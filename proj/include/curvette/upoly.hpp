/*
 * upoly.hpp
 * Dense univariate polynomials over Rat, plus the Sturm machinery used for
 * exact real-root counting on intervals.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvette/rat.hpp"

namespace curvette {

class UPoly {
public:
    UPoly() = default;
    explicit UPoly(Rat c) { c_.push_back(std::move(c)); normalize(); }
    explicit UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static UPoly zero() { return UPoly(); }
    static UPoly one() { return UPoly(Rat(1)); }
    // The generator of the coefficient field's parameter: p(u) = u.
    static UPoly var() { return UPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& coeff(int i) const;
    const Rat& lead() const;

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly scaled(const Rat& c) const;

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    // Euclidean division over the field Rat; b must be nonzero.
    static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);

    UPoly derivative() const;
    Rat evaluate(const Rat& x) const;
    UPoly monic() const;

    // monic gcd
    static UPoly gcd(UPoly a, UPoly b);

    // p with multiple roots stripped: p / gcd(p, p')
    UPoly square_free_part() const;

    std::string to_string(const std::string& var = "u") const;

private:
    void normalize();
    std::vector<Rat> c_; // c_[i] * u^i, no trailing zeros; empty == 0
};

// Number of distinct real roots of p in the open interval (lo, hi), where a
// missing endpoint means -oo / +oo. Preconditions: p != 0 and p nonzero at
// any finite endpoint supplied.
int sturm_count_open(const UPoly& p, const std::optional<Rat>& lo, const std::optional<Rat>& hi);

// The public operation: finite endpoints, errors endpoint-is-root when
// p(lo) == 0 or p(hi) == 0.
int sturm_root_count(const UPoly& p, const Rat& lo, const Rat& hi);

} // namespace curvette
