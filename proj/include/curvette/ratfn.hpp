/*
 * ratfn.hpp
 * The coefficient field: rational functions of one parameter u over Q.
 * Normal form: numerator and denominator coprime, denominator monic, zero
 * represented as 0/1. Equality is therefore structural.
 */
#pragma once

#include <string>

#include "curvette/upoly.hpp"

namespace curvette {

class RatFn {
public:
    RatFn() : num_(), den_(UPoly::one()) {}
    RatFn(long n) : num_(Rat(n)), den_(UPoly::one()) {}
    explicit RatFn(Rat c) : num_(std::move(c)), den_(UPoly::one()) {}
    explicit RatFn(UPoly num) : num_(std::move(num)), den_(UPoly::one()) {}
    RatFn(UPoly num, UPoly den);

    static RatFn param() { return RatFn(UPoly::var()); }

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    // Only valid when is_constant().
    Rat constant_value() const;

    RatFn operator-() const;
    friend RatFn operator+(const RatFn& a, const RatFn& b);
    friend RatFn operator-(const RatFn& a, const RatFn& b);
    friend RatFn operator*(const RatFn& a, const RatFn& b);
    friend RatFn operator/(const RatFn& a, const RatFn& b);
    RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
    RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
    RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
    RatFn& operator/=(const RatFn& o) { return *this = *this / o; }

    RatFn inverse() const;
    RatFn pow(unsigned e) const;

    friend bool operator==(const RatFn& a, const RatFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

    // Exact evaluation at u = x; pole reported as an error.
    Rat evaluate(const Rat& x) const;

    std::string to_string() const;

private:
    void normalize();
    UPoly num_, den_;
};

} // namespace curvette
