#pragma once

#include <string>

#include "gl2/multipoly.hpp"

namespace gl2 {

/// Fraction of multivariate polynomials over the Gaussian rationals.
///
/// Reduction policy (documented contract, see exact-scalars design):
///  - rational content is stripped from numerator and denominator,
///  - exact polynomial division is attempted both ways (this cancels
///    monomial factors and whole-polynomial factors),
///  - the denominator is normalised to leading coefficient 1.
/// A full multivariate gcd is NOT computed, so equal values may carry
/// different representations; operator== decides equality by
/// cross-multiplication, which is exact and total.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(int c) : num_(c), den_(1) {}
    RatFunc(const Rational& c) : num_(c), den_(1) {}
    RatFunc(const GaussRational& c) : num_(c), den_(1) {}
    RatFunc(MultiPoly num) : num_(std::move(num)), den_(1) {}
    RatFunc(MultiPoly num, MultiPoly den);

    static RatFunc variable(const std::string& name) { return RatFunc(MultiPoly::variable(name)); }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    GaussRational constant_value() const { return num_.constant_value() / den_.constant_value(); }
    bool is_polynomial() const { return den_.is_constant(); }

    friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_, already_reduced_tag{}); }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
    RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

    /// Equality by cross-multiplication.
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc pow(long e) const;

    /// Formal partial derivative by the quotient rule.
    RatFunc partial(const std::string& var) const;

    RatFunc conj() const;

    /// Exact evaluation; throws std::domain_error naming the offending
    /// denominator if it vanishes at the point.
    GaussRational evaluate(const std::map<std::string, GaussRational, VarLess>& point) const;

    /// "num" or "(num)/(den)".
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const RatFunc& f);

private:
    struct already_reduced_tag {};
    RatFunc(MultiPoly num, MultiPoly den, already_reduced_tag)
        : num_(std::move(num)), den_(std::move(den)) {}
    void reduce();

    MultiPoly num_;
    MultiPoly den_;
};

inline RatFunc operator*(const Rational& c, const RatFunc& f) { return RatFunc(c) * f; }
inline RatFunc operator*(const RatFunc& f, const Rational& c) { return f * RatFunc(c); }

}  // namespace gl2
