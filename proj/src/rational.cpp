#include "gl2/rational.hpp"

#include <ostream>

namespace gl2 {

Rational Rational::pow(long e) const {
    if (e < 0) {
        if (is_zero()) throw std::domain_error("Rational: 0^negative");
        return inverse().pow(-e);
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

bool Rational::nth_root(unsigned long n, Rational& out) const {
    if (n == 0) throw std::domain_error("Rational: 0th root");
    if (is_zero()) { out = Rational(0); return true; }
    if (sgn() < 0 && n % 2 == 0) return false;
    mpz_class num = q_.get_num(), den = q_.get_den(), rn, rd;
    const bool neg = num < 0;
    if (neg) num = -num;
    const int num_exact = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n);
    const int den_exact = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n);
    if (!num_exact || !den_exact) return false;
    if (neg) rn = -rn;
    out = Rational(rn, rd);
    return true;
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational gcd(const Rational& a, const Rational& b) {
    mpz_class n, d;
    mpz_gcd(n.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
    mpz_lcm(d.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
    return Rational(n, d);
}

Rational lcm(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return Rational(0);
    mpz_class n, d;
    mpz_lcm(n.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
    mpz_gcd(d.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
    return Rational(n, d);
}

GaussRational GaussRational::pow(long e) const {
    if (e < 0) {
        if (is_zero()) throw std::domain_error("GaussRational: 0^negative");
        return (GaussRational(1) / *this).pow(-e);
    }
    GaussRational acc(1), base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string GaussRational::str() const {
    if (im_.is_zero()) return re_.str();
    std::string s;
    if (!re_.is_zero()) s = "(" + re_.str() + ")";
    if (im_.sgn() < 0)
        s += s.empty() ? "-" : "-";
    else if (!s.empty())
        s += "+";
    s += "i(" + im_.abs().str() + ")";
    return s;
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << z.str(); }

}  // namespace gl2
