#pragma once

#include <array>
#include <memory>
#include <vector>

#include "gl2/rational.hpp"
#include "gl2/rep.hpp"
#include "gl2/torsion.hpp"

namespace gl2 {

/// The four trace conditions cutting out the orthogonal complement of the
/// algebra image inside End(V): traces against the representation of the
/// four elementary 2x2 matrices. In matrix entries (row r, col c):
///   f0 = sum_r M(r, r)                  f1 = sum_r (k-2r) M(r, r)
///   f2 = sum_r (k-r) M(r, r+1)          f3 = sum_r (r+1) M(r+1, r)
class PerpConditions {
public:
    explicit PerpConditions(int k);

    int degree() const { return k_; }

    /// Evaluates functional f (0..3) on a (k+1)x(k+1) matrix over any ring.
    template <class S>
    S eval(int f, const Matrix<S>& m) const {
        check(m);
        const size_t n = static_cast<size_t>(k_) + 1;
        S acc(0);
        switch (f) {
            case 0:
                for (size_t r = 0; r < n; ++r) acc += m.at(r, r);
                return acc;
            case 1:
                for (size_t r = 0; r < n; ++r) acc += m.at(r, r) * S(k_ - 2 * static_cast<int>(r));
                return acc;
            case 2:
                for (size_t r = 0; r + 1 < n; ++r) acc += m.at(r, r + 1) * S(k_ - static_cast<int>(r));
                return acc;
            case 3:
                for (size_t r = 0; r + 1 < n; ++r) acc += m.at(r + 1, r) * S(static_cast<int>(r) + 1);
                return acc;
            default:
                throw std::invalid_argument("PerpConditions: functional index");
        }
    }

    template <class S>
    bool all_zero(const Matrix<S>& m) const {
        for (int f = 0; f < 4; ++f)
            if (!eval(f, m).is_zero()) return false;
        return true;
    }

    /// Rank of the four functionals as covectors on End(V); equals 4 for
    /// every k >= 1 (so dim of the cut-out space is (k+1)^2 - 4).
    size_t rank() const;

private:
    template <class S>
    void check(const Matrix<S>& m) const {
        const size_t n = static_cast<size_t>(k_) + 1;
        if (m.rows() != n || m.cols() != n)
            throw std::invalid_argument("PerpConditions: matrix size mismatch");
    }
    int k_;
};

/// True iff all four trace conditions vanish on m.
template <class S>
bool perp_test(int k, const Matrix<S>& m) {
    return PerpConditions(k).all_zero(m);
}

/// gl(2)-valued correction evaluated on the frame vectors: slot(r, c, m) is
/// the (r, c) entry of the 2x2 correction paired with the m-th frame
/// vector (the monomial x^(k-m) y^m).
template <class S>
struct ConnectionCorrection {
    int k = 0;
    std::array<std::array<std::vector<S>, 2>, 2> slot;

    explicit ConnectionCorrection(int kk) : k(kk) {
        for (auto& row : slot)
            for (auto& v : row) v.assign(static_cast<size_t>(k) + 1, S(0));
    }

    /// 2x2 matrix paired with frame vector m.
    std::array<std::array<S, 2>, 2> at(int m) const {
        return {{{slot[0][0][static_cast<size_t>(m)], slot[0][1][static_cast<size_t>(m)]},
                 {slot[1][0][static_cast<size_t>(m)], slot[1][1][static_cast<size_t>(m)]}}};
    }

    bool is_zero() const {
        for (const auto& row : slot)
            for (const auto& v : row)
                for (const auto& s : v)
                    if (!s.is_zero()) return false;
        return true;
    }
};

/// Applies the torsion alteration of a connection shift: with Psi the
/// algebra representation of the correction, the (j, l) pair of the new
/// tensor gains Psi(e_j) e_l - Psi(e_l) e_j (standard wedge-evaluation
/// convention; the whole pipeline uses this orientation consistently).
template <class S>
TorsionTensor<S> apply_correction(const TorsionTensor<S>& t, const ConnectionCorrection<S>& psi) {
    const int k = t.degree();
    if (psi.k != k) throw std::invalid_argument("apply_correction: degree mismatch");
    std::vector<Matrix<S>> rep;
    rep.reserve(static_cast<size_t>(k) + 1);
    for (int m = 0; m <= k; ++m) rep.push_back(algebra_rep<S>(k, psi.at(m)));
    TorsionTensor<S> out = t;
    for (int j = 0; j <= k; ++j)
        for (int l = j + 1; l <= k; ++l)
            for (int r = 0; r <= k; ++r) {
                const S v = rep[static_cast<size_t>(j)].at(static_cast<size_t>(r), static_cast<size_t>(l)) -
                            rep[static_cast<size_t>(l)].at(static_cast<size_t>(r), static_cast<size_t>(j));
                if (!v.is_zero()) out.add(r, j, l, v);
            }
    return out;
}

/// Solved linear map torsion -> correction making every contraction of the
/// corrected tensor satisfy the four trace conditions. Exists and is
/// unique for k >= 3; construction for k <= 2 throws (the closed-form
/// determinant carries a factor k-2).
class NormalizationOperator {
public:
    explicit NormalizationOperator(int k);

    int degree() const { return k_; }
    const Matrix<Rational>& system() const { return system_; }
    const Matrix<Rational>& inverse() const { return inverse_; }

    /// Cached per-degree instance (immutable, shareable).
    static std::shared_ptr<const NormalizationOperator> for_degree(int k);

    /// Unknown layout: index (slot_r, slot_c, m) -> (2 r + c)(k+1) + m.
    size_t unknown_index(int r, int c, int m) const {
        return static_cast<size_t>((2 * r + c) * (k_ + 1) + m);
    }
    /// Equation layout: contraction j, functional f -> 4 j + f.
    size_t equation_index(int j, int f) const { return static_cast<size_t>(4 * j + f); }

    template <class S>
    ConnectionCorrection<S> solve(const TorsionTensor<S>& t) const {
        if (t.degree() != k_) throw std::invalid_argument("NormalizationOperator: degree mismatch");
        const PerpConditions perp(k_);
        const size_t dim = 4 * (static_cast<size_t>(k_) + 1);
        std::vector<S> rhs(dim, S(0));
        for (int j = 0; j <= k_; ++j) {
            const Matrix<S> contr = t.contraction(j);
            for (int f = 0; f < 4; ++f) rhs[equation_index(j, f)] = perp.eval(f, contr);
        }
        ConnectionCorrection<S> psi(k_);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                for (int m = 0; m <= k_; ++m) {
                    S acc(0);
                    const size_t u = unknown_index(r, c, m);
                    for (size_t e = 0; e < dim; ++e) {
                        const Rational& w = inverse_.at(u, e);
                        if (w.is_zero() || rhs[e].is_zero()) continue;
                        acc += S(w) * rhs[e];
                    }
                    psi.slot[static_cast<size_t>(r)][static_cast<size_t>(c)][static_cast<size_t>(m)] =
                        S(0) - acc;
                }
        return psi;
    }

private:
    int k_;
    Matrix<Rational> system_;   // homogeneous part, equations x unknowns
    Matrix<Rational> inverse_;  // cached exact inverse
};

/// One diagonal block of the normalization system.
struct BlockInfo {
    std::vector<size_t> equations;  // global equation indices (sorted)
    std::vector<size_t> unknowns;   // global unknown indices (sorted)
    Rational det;                   // determinant in canonical order
};

/// Block analysis of the normalization system. The system splits into
/// connected components: one 4x4 block per interior frame index (their
/// determinants all agree: the common_det), two 3x3 blocks and two 1x1
/// blocks at the boundary.
struct BlockReport {
    int k = 0;
    bool shape_ok = false;   // found the expected 4x4/3x3/1x1 partition
    Rational common_det;     // shared 4x4 determinant (0 when k = 2)
    std::vector<BlockInfo> blocks;
    Rational full_det;       // determinant of the whole system
};

/// Discovers the block structure of the normalization system and computes
/// the exact block determinants; works for every k >= 1 regardless of
/// solvability (k = 2 reports a zero common determinant).
BlockReport block_determinant(int k);

/// Closed form (k-2)(k-1)^2 k^3 (k+2)(k+3)(k+4)(k^2+k+6) / 216 that the
/// common 4x4 determinant follows.
Rational block_determinant_closed_form(int k);

/// The degree-3 torsion family with components proportional to eight
/// parameters tau_0..tau_7 (Bryant's torsion in dimension four): every
/// contraction satisfies the four trace conditions identically in tau.
template <class S>
TorsionTensor<S> bryant_torsion(const std::array<S, 8>& tau) {
    // Table rows: value index r, then (j, l, integer weight, tau index).
    static constexpr struct {
        int r, j, l, w, t;
    } kTable[] = {
        {0, 2, 3, 2520, 0}, {0, 1, 3, -720, 1}, {0, 0, 3, 360, 2},  {0, 1, 2, 120, 2},
        {0, 0, 2, -144, 3}, {0, 0, 1, 72, 4},   {1, 2, 3, 1080, 1}, {1, 1, 3, -720, 2},
        {1, 0, 3, 648, 3},  {1, 1, 2, 216, 3},  {1, 0, 2, -432, 4}, {1, 0, 1, 360, 5},
        {2, 2, 3, 360, 2},  {2, 1, 3, -432, 3}, {2, 0, 3, 648, 4},  {2, 1, 2, 216, 4},
        {2, 0, 2, -720, 5}, {2, 0, 1, 1080, 6}, {3, 2, 3, 72, 3},   {3, 1, 3, -144, 4},
        {3, 0, 3, 360, 5},  {3, 1, 2, 120, 5},  {3, 0, 2, -720, 6}, {3, 0, 1, 2520, 7},
    };
    TorsionTensor<S> out(3);
    for (const auto& e : kTable) {
        const S v = tau[static_cast<size_t>(e.t)] * S(e.w);
        if (!v.is_zero()) out.add(e.r, e.j, e.l, v);
    }
    return out;
}

}  // namespace gl2
