#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace gl2 {

/// Exact rational number. Always canonical: gcd(|num|, den) = 1, den > 0.
///
/// Backed by GMP's mpq_class; this wrapper pins the canonical form, the
/// error behaviour (throws instead of aborting on division by zero) and
/// the text rendering "n" / "n/d".
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(static_cast<long int>(n)) {}
    Rational(const mpz_class& n) : q_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    const mpz_class num() const { return q_.get_num(); }
    const mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sgn() const { return ::sgn(q_); }

    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }
    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(a.q_ / b.q_));
    }

    Rational& operator+=(const Rational& b) { q_ += b.q_; return *this; }
    Rational& operator-=(const Rational& b) { q_ -= b.q_; return *this; }
    Rational& operator*=(const Rational& b) { q_ *= b.q_; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational abs() const { return sgn() < 0 ? -*this : *this; }
    Rational inverse() const { return Rational(1) / *this; }

    /// Exponent may be negative; then the base must be nonzero.
    Rational pow(long e) const;

    /// Exact n-th root if one exists (n >= 1), else nullopt-style failure
    /// signalled by the bool.
    bool nth_root(unsigned long n, Rational& out) const;

    /// Canonical text, e.g. "-3/4", "7".
    std::string str() const;

    /// Parses the canonical text form (optional sign, digits, optional "/digits").
    static Rational parse(const std::string& s);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

    friend Rational gcd(const Rational& a, const Rational& b);
    friend Rational lcm(const Rational& a, const Rational& b);

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

/// gcd over Q: the positive generator of the fractional ideal (a, b),
/// gcd(n1/d1, n2/d2) = gcd(n1, n2)/lcm(d1, d2). gcd(0, 0) = 0.
Rational gcd(const Rational& a, const Rational& b);
Rational lcm(const Rational& a, const Rational& b);

/// Gaussian rational a + b*i with exact rational parts.
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(int n) : re_(n) {}
    GaussRational(const Rational& re) : re_(re) {}
    GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRational i() { return GaussRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussRational conj() const { return GaussRational(re_, -im_); }
    /// re^2 + im^2 (the norm form; zero iff the value is zero).
    Rational norm() const { return re_ * re_ + im_ * im_; }

    friend GaussRational operator-(const GaussRational& a) { return {-a.re_, -a.im_}; }
    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
        if (b.is_zero()) throw std::domain_error("GaussRational: division by zero");
        const Rational n = b.norm();
        const GaussRational t = a * b.conj();
        return {t.re_ / n, t.im_ / n};
    }

    GaussRational& operator+=(const GaussRational& b) { return *this = *this + b; }
    GaussRational& operator-=(const GaussRational& b) { return *this = *this - b; }
    GaussRational& operator*=(const GaussRational& b) { return *this = *this * b; }
    GaussRational& operator/=(const GaussRational& b) { return *this = *this / b; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    GaussRational pow(long e) const;

    /// Canonical text: "3/4" when real, "(3/4)+i(1/2)", "(3/4)-i(1/2)",
    /// "i(1/2)", "-i(1/2)" otherwise.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const GaussRational& z);

private:
    Rational re_;
    Rational im_;
};

inline GaussRational conj(const GaussRational& z) { return z.conj(); }

}  // namespace gl2
