#include "curvette/upoly.hpp"

#include <sstream>

namespace curvette {

void UPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rat& UPoly::coeff(int i) const {
    static const Rat kZero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

const Rat& UPoly::lead() const {
    if (is_zero()) throw math_error(errc::invariant_violation, "lead of zero polynomial");
    return c_.back();
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(c));
}

UPoly UPoly::scaled(const Rat& k) const {
    if (k.is_zero()) return UPoly();
    UPoly r = *this;
    for (auto& c : r.c_) c *= k;
    return r;
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.is_zero()) throw math_error(errc::division_by_zero, "polynomial division by zero");
    std::vector<Rat> rem = a.c_;
    std::vector<Rat> quo;
    int db = b.degree();
    if (static_cast<int>(rem.size()) - 1 >= db)
        quo.assign(rem.size() - static_cast<size_t>(db), Rat(0));
    while (static_cast<int>(rem.size()) - 1 >= db) {
        while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
        if (static_cast<int>(rem.size()) - 1 < db) break;
        int dr = static_cast<int>(rem.size()) - 1;
        Rat f = rem.back() / b.lead();
        quo[static_cast<size_t>(dr - db)] = f;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<size_t>(dr - db + i)] -= f * b.coeff(i);
        rem.pop_back();
    }
    q = UPoly(std::move(quo));
    r = UPoly(std::move(rem));
}

UPoly UPoly::derivative() const {
    if (degree() <= 0) return UPoly();
    std::vector<Rat> c(c_.size() - 1, Rat(0));
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return UPoly(std::move(c));
}

Rat UPoly::evaluate(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(Rat(1) / lead());
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UPoly UPoly::square_free_part() const {
    if (degree() <= 0) return *this;
    UPoly g = gcd(*this, derivative());
    if (g.degree() <= 0) return *this;
    UPoly q, r;
    divmod(*this, g, q, r);
    return q;
}

std::string UPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const Rat& c = c_[i];
        if (c.is_zero()) continue;
        Rat a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << a.to_string();
        } else {
            if (!a.is_one()) os << a.to_string() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

std::vector<UPoly> sturm_chain(const UPoly& p) {
    std::vector<UPoly> chain;
    chain.push_back(p);
    UPoly d = p.derivative();
    if (!d.is_zero()) chain.push_back(d);
    while (chain.size() >= 2 && !chain.back().is_zero()) {
        UPoly q, r;
        UPoly::divmod(chain[chain.size() - 2], chain.back(), q, r);
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

int sign_at(const UPoly& p, const std::optional<Rat>& x, bool plus_infinity) {
    if (p.is_zero()) return 0;
    if (x) return p.evaluate(*x).sign();
    int s = p.lead().sign();
    if (!plus_infinity && p.degree() % 2 == 1) s = -s;
    return s;
}

int variations(const std::vector<UPoly>& chain, const std::optional<Rat>& x, bool plus_infinity) {
    int count = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign_at(p, x, plus_infinity);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

} // namespace

int sturm_count_open(const UPoly& p, const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
    if (p.is_zero()) throw math_error(errc::invariant_violation, "root count of zero polynomial");
    if (p.degree() == 0) return 0;
    auto chain = sturm_chain(p);
    int vlo = variations(chain, lo, false);
    int vhi = variations(chain, hi, true);
    return vlo - vhi;
}

int sturm_root_count(const UPoly& p, const Rat& lo, const Rat& hi) {
    if (p.is_zero()) throw math_error(errc::invariant_violation, "root count of zero polynomial");
    if (!(lo < hi)) throw math_error(errc::invariant_violation, "empty interval for root count");
    if (p.evaluate(lo).is_zero() || p.evaluate(hi).is_zero())
        throw math_error(errc::endpoint_is_root, "polynomial vanishes at an interval endpoint");
    return sturm_count_open(p, lo, hi);
}

} // namespace curvette
