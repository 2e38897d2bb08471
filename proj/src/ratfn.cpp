#include "curvette/ratfn.hpp"

namespace curvette {

RatFn::RatFn(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw math_error(errc::division_by_zero, "rational function with zero denominator");
    normalize();
}

void RatFn::normalize() {
    if (num_.is_zero()) {
        den_ = UPoly::one();
        return;
    }
    // Constant denominators and numerators skip the gcd entirely.
    if (den_.degree() == 0) {
        Rat lc = den_.coeff(0);
        if (!lc.is_one()) {
            num_ = num_.scaled(Rat(1) / lc);
            den_ = UPoly::one();
        }
        return;
    }
    if (num_.degree() > 0) {
        UPoly g = UPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            UPoly q, r;
            UPoly::divmod(num_, g, q, r);
            num_ = q;
            UPoly::divmod(den_, g, q, r);
            den_ = q;
        }
    }
    Rat lc = den_.lead();
    if (!lc.is_one()) {
        Rat inv = Rat(1) / lc;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Rat RatFn::constant_value() const {
    if (!is_constant())
        throw math_error(errc::invariant_violation, "rational function is not constant");
    return num_.coeff(0);
}

RatFn RatFn::operator-() const {
    RatFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFn operator+(const RatFn& a, const RatFn& b) {
    if (a.den_.degree() == 0 && b.den_.degree() == 0) {
        RatFn r;
        r.num_ = a.num_ + b.num_; // both denominators are exactly 1
        return r;
    }
    return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }

RatFn operator*(const RatFn& a, const RatFn& b) {
    if (a.den_.degree() == 0 && b.den_.degree() == 0) {
        RatFn r;
        r.num_ = a.num_ * b.num_;
        return r;
    }
    return RatFn(a.num_ * b.num_, a.den_ * b.den_);
}

RatFn operator/(const RatFn& a, const RatFn& b) {
    if (b.is_zero())
        throw math_error(errc::division_by_zero, "rational function division by zero");
    return RatFn(a.num_ * b.den_, a.den_ * b.num_);
}

RatFn RatFn::inverse() const {
    if (is_zero()) throw math_error(errc::division_by_zero, "inverse of zero");
    return RatFn(den_, num_);
}

RatFn RatFn::pow(unsigned e) const {
    RatFn acc(1);
    RatFn base = *this;
    while (e) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

Rat RatFn::evaluate(const Rat& x) const {
    Rat d = den_.evaluate(x);
    if (d.is_zero())
        throw math_error(errc::pole_in_interval, "pole at the assumed parameter value");
    return num_.evaluate(x) / d;
}

std::string RatFn::to_string() const {
    if (den_.degree() == 0) {
        // monic degree-0 denominator is exactly 1
        return num_.to_string();
    }
    std::string n = num_.to_string();
    std::string d = den_.to_string();
    if (num_.degree() > 0) n = "(" + n + ")";
    return n + "/(" + d + ")";
}

} // namespace curvette
