#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gl2/rational.hpp"

namespace gl2 {

/// Variable order used everywhere: shorter names first, ties broken
/// lexicographically, so "p2" < "p10". This keeps numbered variables in
/// natural order without a dedicated numeric parser.
struct VarLess {
    bool operator()(const std::string& a, const std::string& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Multivariate polynomial over the Gaussian rationals.
///
/// Canonical form: variable list sorted by VarLess and restricted to the
/// variables actually occurring, terms held in graded-lexicographic order,
/// no zero coefficients. Two polynomials are equal iff their canonical
/// representations coincide.
class MultiPoly {
public:
    using Exponents = std::vector<unsigned>;

    /// Graded lex: first by total degree, then lexicographically along the
    /// variable order. Largest term = leading term.
    struct TermLess {
        bool operator()(const Exponents& a, const Exponents& b) const;
    };
    using TermMap = std::map<Exponents, GaussRational, TermLess>;

    MultiPoly() = default;
    MultiPoly(int c) : MultiPoly(GaussRational(c)) {}
    MultiPoly(const Rational& c) : MultiPoly(GaussRational(c)) {}
    MultiPoly(const GaussRational& c);

    static MultiPoly variable(const std::string& name);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Requires is_constant().
    GaussRational constant_value() const;

    unsigned total_degree() const;  // 0 for the zero polynomial
    unsigned degree_in(const std::string& var) const;

    friend MultiPoly operator-(const MultiPoly& a);
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
    MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
    MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly pow(unsigned e) const;

    /// Formal partial derivative. A variable that does not occur gives 0.
    MultiPoly partial(const std::string& var) const;

    /// Leading term under graded lex. Requires !is_zero().
    std::pair<Exponents, GaussRational> leading_term() const;

    /// Positive rational content: gcd of the rational parts of all
    /// coefficients (both real and imaginary). Zero polynomial -> 0.
    Rational content() const;

    /// Exact division: returns the quotient iff divisor divides *this
    /// exactly, nullopt otherwise. Divisor must be nonzero.
    std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

    /// Substitutes values for all variables; every variable of the
    /// polynomial must be present in the map.
    GaussRational evaluate(const std::map<std::string, GaussRational, VarLess>& point) const;

    MultiPoly conj() const;

    /// Canonical text, e.g. "p0^2*p1 - 2*p1", "((1/2)+i(1))*p0".
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

private:
    void normalize();
    static MultiPoly merge(const MultiPoly& a, const MultiPoly& b, bool subtract);

    std::vector<std::string> vars_;  // sorted by VarLess, only occurring vars
    TermMap terms_;                  // exponent vectors aligned with vars_
};

inline MultiPoly operator*(const GaussRational& c, const MultiPoly& p) { return MultiPoly(c) * p; }
inline MultiPoly operator*(const MultiPoly& p, const GaussRational& c) { return p * MultiPoly(c); }

}  // namespace gl2
