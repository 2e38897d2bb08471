#include "curvette/rat.hpp"

namespace curvette {

Rat::Rat(long n, long d) {
    if (d == 0) throw math_error(errc::division_by_zero, "rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rat::Rat(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw math_error(errc::division_by_zero, "rational with zero denominator");
    v_ = mpq_class(n) / mpq_class(d);
    v_.canonicalize();
}

Rat Rat::from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw math_error(errc::syntax_error, "bad rational literal '" + s + "'");
    q.canonicalize();
    return Rat(q);
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw math_error(errc::division_by_zero, "rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::pow(unsigned e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    mpq_class q(n);
    q /= mpq_class(d);
    return Rat(q);
}

mpz_class Rat::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

std::string Rat::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat rat_gcd(const Rat& a, const Rat& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    mpz_class g;
    mpz_class ad = a.num() * b.den();
    mpz_class cb = b.num() * a.den();
    mpz_gcd(g.get_mpz_t(), ad.get_mpz_t(), cb.get_mpz_t());
    return Rat(g, a.den() * b.den());
}

} // namespace curvette
