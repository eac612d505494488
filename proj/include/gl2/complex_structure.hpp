#pragma once

#include <string>
#include <vector>

#include "gl2/binary_form.hpp"
#include "gl2/matrix.hpp"
#include "gl2/rep.hpp"

namespace gl2 {

/// The canonical complex structure on degree-k forms, written in the
/// monomial frame. For even k the weight-zero line (x^2+y^2)^(k/2) is
/// annihilated and flagged; the structure is genuine only on the
/// positive-weight part.
struct ComplexStructureMatrix {
    int k = 0;
    Matrix<Rational> m;
    bool weight_zero_annihilated = false;  // true iff k is even
};

/// Rotation by +90 degrees on each weight pair: the even generator maps to
/// the odd one and the odd to minus the even. Rational in the monomial
/// frame.
ComplexStructureMatrix jk_matrix(int k);

/// Dual description: row j holds the coefficients of the (1,0)-form
/// xi^{k,j} on the monomial-dual frame (w^0..w^k). Paired with the complex
/// monomials: xi^{k,j}(X_{k,l}) = 2 delta_{jl} and xi^{k,j}(conj X) = 0.
struct XiBasis {
    int k = 0;
    // rows[j], j = 0 .. pair_count-1 (pair_count = (k+1)/2 rounded down to
    // the number of weight pairs; for even k the weight-zero dual row is
    // not a (1,0)-form and is excluded).
    std::vector<std::vector<GaussRational>> rows;
    int pair_count() const { return static_cast<int>(rows.size()); }
};

XiBasis xi_basis(int k);

/// Renders one xi row in the factored style "(1/4)*(3*w0 + w2 + i*(w1 + 3*w3))":
/// common denominator pulled out front, integer combinations of w0..wk inside.
std::string xi_row_pretty(const std::vector<GaussRational>& row);

/// Full change of frame between monomial coordinates and the complex frame
/// (xi^0..xi^q, conj(xi^0)..conj(xi^q)), odd k only. frame.at(a, i) is the
/// coefficient of w^i in the a-th complex coframe element; the second block
/// of rows is the entrywise conjugate of the first.
struct ComplexBasisChange {
    int k = 0;
    Matrix<GaussRational> frame;    // rows = complex coframe on w-basis
    Matrix<GaussRational> inverse;  // frame^-1
    int pair_count() const { return (k + 1) / 2; }
    bool is_holomorphic_index(int a) const { return a < pair_count(); }
};

/// Throws std::domain_error for even k (the frame is square only in odd
/// degree).
ComplexBasisChange complex_basis_change(int k);

/// Vector components (value in the monomial frame) to complex-frame
/// components via the xi pairing. Output entry a equals the a-th complex
/// coframe element applied to v; note the pairing normalisation
/// xi(X) = 2 delta, so X_{k,0} maps to twice a unit vector.
template <class S>
std::vector<S> to_complex_vector(const ComplexBasisChange& b, const std::vector<S>& v) {
    if (v.size() != static_cast<size_t>(b.k) + 1)
        throw std::invalid_argument("to_complex_vector: dimension mismatch");
    std::vector<S> out(v.size(), S(0));
    for (size_t a = 0; a < v.size(); ++a)
        for (size_t i = 0; i < v.size(); ++i)
            if (!b.frame.at(a, i).is_zero()) out[a] += S(b.frame.at(a, i)) * v[i];
    return out;
}

/// Covector components transform by the inverse so that pairings are
/// preserved.
template <class S>
std::vector<S> to_complex_covector(const ComplexBasisChange& b, const std::vector<S>& w) {
    if (w.size() != static_cast<size_t>(b.k) + 1)
        throw std::invalid_argument("to_complex_covector: dimension mismatch");
    std::vector<S> out(w.size(), S(0));
    for (size_t a = 0; a < w.size(); ++a)
        for (size_t i = 0; i < w.size(); ++i)
            if (!b.inverse.at(i, a).is_zero()) out[a] += S(b.inverse.at(i, a)) * w[i];
    return out;
}

/// Antisymmetric 2-form components T_{jl} (full antisymmetric matrix) to
/// the complex frame: congruence by the inverse frame matrix.
template <class S>
Matrix<S> to_complex_two_form(const ComplexBasisChange& b, const Matrix<S>& t) {
    const size_t n = static_cast<size_t>(b.k) + 1;
    if (t.rows() != n || t.cols() != n)
        throw std::invalid_argument("to_complex_two_form: dimension mismatch");
    Matrix<S> out(n, n);
    for (size_t a = 0; a < n; ++a)
        for (size_t c = 0; c < n; ++c) {
            S acc(0);
            for (size_t j = 0; j < n; ++j) {
                if (b.inverse.at(j, a).is_zero()) continue;
                for (size_t l = 0; l < n; ++l) {
                    if (t.at(j, l).is_zero() || b.inverse.at(l, c).is_zero()) continue;
                    acc += S(b.inverse.at(j, a)) * t.at(j, l) * S(b.inverse.at(l, c));
                }
            }
            out.at(a, c) = acc;
        }
    return out;
}

}  // namespace gl2
