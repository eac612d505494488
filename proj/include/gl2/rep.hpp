#pragma once

#include <array>

#include "gl2/binary_form.hpp"
#include "gl2/matrix.hpp"

namespace gl2 {

/// Matrix of the gl(2)-representation on degree-k forms, in the monomial
/// frame (x^k, ..., y^k) with coefficient vectors as columns. Only the
/// main, sub- and super-diagonal are populated:
///   (r, r)   = (k-r) phi^1_1 + r phi^2_2
///   (r+1, r) = (k-r) phi^1_2
///   (r, r+1) = (r+1) phi^2_1
/// Works over any commutative ring S with S(int) and ring ops.
template <class S>
Matrix<S> algebra_rep(int k, const std::array<std::array<S, 2>, 2>& phi) {
    Matrix<S> m(static_cast<size_t>(k) + 1, static_cast<size_t>(k) + 1);
    for (int r = 0; r <= k; ++r) {
        m.at(r, r) = phi[0][0] * S(k - r) + phi[1][1] * S(r);
        if (r < k) {
            m.at(r + 1, r) = phi[1][0] * S(k - r);
            m.at(r, r + 1) = phi[0][1] * S(r + 1);
        }
    }
    return m;
}

Matrix<GaussRational> algebra_rep(int k, const Gl2Matrix& phi);

/// Matrix M(g) of the substitution action: coefficient column of V.g equals
/// M(g) times the coefficient column of V. With this convention M is
/// multiplicative, M(g) M(h) = M(g h), and the action composes as
/// act(act(V, g), h) = act(V, h g).
/// Throws on singular g.
Matrix<GaussRational> group_rep(int k, const Gl2Matrix& g);

/// Exact infinitesimal consistency: expands the action of I + eps*phi over
/// dual numbers (eps^2 = 0) and compares with I + eps*algebra_rep(k, phi).
/// No limits involved.
bool differential_check(int k, const Gl2Matrix& phi);

/// Action of algebra_rep(k, phi) on the complex monomial
/// X_j = (x+iy)^j (x-iy)^(k-j), decomposed on (X_{j-1}, X_j, X_{j+1}).
struct ComplexMonomialAction {
    GaussRational lower;  // coefficient of X_{j-1} (zero when j = 0)
    GaussRational diag;   // coefficient of X_j
    GaussRational raise;  // coefficient of X_{j+1} (zero when j = k)
};

/// Decomposes algebra_rep(k, phi) applied to complex_monomial(k, j); the
/// image always lies in the span of the three neighbours. Throws if j is
/// out of range.
ComplexMonomialAction complex_monomial_action(int k, int j, const Gl2Matrix& phi);

/// Closed form for the same three coefficients:
///   lower = (i/2) j zeta,  diag = (1/2)(j conj(alpha) + (k-j) alpha),
///   raise = -(i/2) (k-j) conj(zeta),
/// with zeta = (phi^1_2 + phi^2_1) + i (phi^2_2 - phi^1_1) and
/// alpha = (phi^1_1 + phi^2_2) + i (phi^1_2 - phi^2_1). ("conj" here means
/// the formula with i negated, which is the conjugate for real phi.)
ComplexMonomialAction complex_monomial_action_closed_form(int k, int j, const Gl2Matrix& phi);

/// zeta(phi) = (phi^1_2 + phi^2_1) + i (phi^2_2 - phi^1_1).
GaussRational zeta_of(const Gl2Matrix& phi);
/// alpha(phi) = (phi^1_1 + phi^2_2) + i (phi^1_2 - phi^2_1).
GaussRational alpha_of(const Gl2Matrix& phi);

}  // namespace gl2
