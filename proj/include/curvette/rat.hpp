/*
 * rat.hpp
 * Arbitrary-precision rationals. Canonical form throughout: reduced fraction,
 * positive denominator (guaranteed by the GMP backend).
 */
#pragma once

#include <gmpxx.h>

#include <string>

#include "curvette/errors.hpp"

namespace curvette {

class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d);
    Rat(const mpz_class& n, const mpz_class& d);
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rat from_string(const std::string& s);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat abs() const { return sign() < 0 ? -*this : *this; }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat pow(unsigned e) const;

    // Largest integer <= value.
    mpz_class floor() const;

    std::string to_string() const;

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

// gcd of two positive rationals a/b, c/d = gcd(ad, cb)/(bd); generates the
// same subgroup of (Q, +) as {a, b}.
Rat rat_gcd(const Rat& a, const Rat& b);

} // namespace curvette
