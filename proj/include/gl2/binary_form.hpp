#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gl2/matrix.hpp"
#include "gl2/rational.hpp"

namespace gl2 {

/// 2x2 matrix over the Gaussian rationals, stored row-major: m[r][c].
/// Acts on row vectors, (x, y) -> (x, y) g, so a binary form transforms by
/// substituting x -> m00 x + m10 y, y -> m01 x + m11 y.
///
/// In the gl(2)-entry naming used throughout (phi^a_b = column a, row b,
/// both 1-based), entry (r, c) holds phi^{c+1}_{r+1}.
class Gl2Matrix {
public:
    Gl2Matrix() = default;
    Gl2Matrix(GaussRational m00, GaussRational m01, GaussRational m10, GaussRational m11)
        : m_{{{std::move(m00), std::move(m01)}, {std::move(m10), std::move(m11)}}} {}

    static Gl2Matrix identity() { return {1, 0, 0, 1}; }
    static Gl2Matrix zero() { return {0, 0, 0, 0}; }
    static Gl2Matrix diagonal(const GaussRational& a, const GaussRational& d) { return {a, 0, 0, d}; }
    /// Elementary matrix with phi^a_b = 1 (a, b in {1, 2}), all else 0.
    static Gl2Matrix elementary(int a, int b);
    /// Conformal rotation [[u, -v], [v, u]].
    static Gl2Matrix co2(const GaussRational& u, const GaussRational& v) { return {u, -v, v, u}; }

    const GaussRational& at(int r, int c) const { return m_[static_cast<size_t>(r)][static_cast<size_t>(c)]; }
    GaussRational& at(int r, int c) { return m_[static_cast<size_t>(r)][static_cast<size_t>(c)]; }
    /// phi^a_b accessor, 1-based representation-theory indices.
    const GaussRational& phi(int a, int b) const { return at(b - 1, a - 1); }

    GaussRational det() const { return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0); }
    bool is_co2() const { return at(0, 0) == at(1, 1) && at(0, 1) == -at(1, 0); }

    friend Gl2Matrix operator*(const Gl2Matrix& x, const Gl2Matrix& y) {
        Gl2Matrix out = zero();
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                out.at(r, c) = x.at(r, 0) * y.at(0, c) + x.at(r, 1) * y.at(1, c);
        return out;
    }
    friend Gl2Matrix operator+(const Gl2Matrix& x, const Gl2Matrix& y) {
        return {x.at(0, 0) + y.at(0, 0), x.at(0, 1) + y.at(0, 1), x.at(1, 0) + y.at(1, 0),
                x.at(1, 1) + y.at(1, 1)};
    }
    friend Gl2Matrix operator-(const Gl2Matrix& x, const Gl2Matrix& y) {
        return {x.at(0, 0) - y.at(0, 0), x.at(0, 1) - y.at(0, 1), x.at(1, 0) - y.at(1, 0),
                x.at(1, 1) - y.at(1, 1)};
    }
    friend bool operator==(const Gl2Matrix& x, const Gl2Matrix& y) { return x.m_ == y.m_; }
    friend bool operator!=(const Gl2Matrix& x, const Gl2Matrix& y) { return !(x == y); }

    Gl2Matrix inverse() const;
    /// Integer power; negative exponents go through the inverse.
    Gl2Matrix power(long e) const;

    Gl2Matrix commutator(const Gl2Matrix& o) const { return *this * o - o * *this; }

private:
    std::array<std::array<GaussRational, 2>, 2> m_;
};

/// Homogeneous binary form of degree k in (x, y) over the Gaussian
/// rationals. coeffs()[i] is the coefficient of x^(k-i) y^i, matching the
/// frame (x^k, x^(k-1)y, ..., y^k) used by every other module.
class BinaryForm {
public:
    explicit BinaryForm(int degree);
    BinaryForm(int degree, std::vector<GaussRational> coeffs);

    static BinaryForm monomial(int degree, int i, GaussRational c = GaussRational(1));
    /// The expanded power (a x + b y)^k.
    static BinaryForm linear_power(int degree, const GaussRational& a, const GaussRational& b);

    int degree() const { return k_; }
    const std::vector<GaussRational>& coeffs() const { return c_; }
    const GaussRational& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
    GaussRational& coeff(int i) { return c_[static_cast<size_t>(i)]; }

    bool is_zero() const;
    BinaryForm conj() const;

    friend BinaryForm operator-(const BinaryForm& f);
    friend BinaryForm operator+(const BinaryForm& f, const BinaryForm& g);
    friend BinaryForm operator-(const BinaryForm& f, const BinaryForm& g);
    /// Product of forms (degrees add).
    friend BinaryForm operator*(const BinaryForm& f, const BinaryForm& g);
    friend BinaryForm operator*(const GaussRational& c, const BinaryForm& f);
    friend bool operator==(const BinaryForm& f, const BinaryForm& g) {
        return f.k_ == g.k_ && f.c_ == g.c_;
    }
    friend bool operator!=(const BinaryForm& f, const BinaryForm& g) { return !(f == g); }

    /// Text form "c0*x^k + c1*x^(k-1)*y + ...".
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const BinaryForm& f);

private:
    int k_;
    std::vector<GaussRational> c_;
};

/// Real/imaginary parts of (x + i y)^i: the degree-i pair transforming by
/// the i-th power of a conformal rotation. Requires i >= 1.
std::pair<BinaryForm, BinaryForm> harmonic_pair(int i);

/// The weight-(k-2j) pair (x^2+y^2)^j * harmonic_pair(k-2j). Requires
/// 0 <= j and k-2j >= 1.
std::pair<BinaryForm, BinaryForm> weight_pair(int k, int j);

/// (x^2+y^2)^(k/2); the weight-zero line of even k.
BinaryForm radial_power(int k);

/// The complex form (x + i y)^j (x - i y)^(k-j), 0 <= j <= k. Conjugation
/// swaps j and k-j.
BinaryForm complex_monomial(int k, int j);

/// The substitution action (V . g)(x, y) = V((x, y) g), expanded.
BinaryForm act(const BinaryForm& v, const Gl2Matrix& g);

/// Basis of the i-dimensional osculating plane at the null direction of
/// (a x + b y): the forms (a x + b y)^(k-s) (c x + d y)^s, s = 0..i-1.
/// Requires ad - bc != 0 and 1 <= i <= k+1.
std::vector<BinaryForm> alpha_plane_basis(int k, int i, const GaussRational& a,
                                          const GaussRational& b, const GaussRational& c,
                                          const GaussRational& d);

/// If v equals (a x + b y)^k for rational a, b, returns the pair; otherwise
/// nullopt. Works over the rationals only: a k-th power with an irrational
/// scale (e.g. 2 x^3) reports "none". Throws on v = 0.
std::optional<std::pair<Rational, Rational>> null_cone_root(const BinaryForm& v);

/// Exact division by the linear form (a x + b y); nullopt if not divisible.
std::optional<BinaryForm> divide_linear(const BinaryForm& v, const GaussRational& a,
                                        const GaussRational& b);

}  // namespace gl2
