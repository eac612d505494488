#include "gl2/normalization.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

namespace gl2 {

PerpConditions::PerpConditions(int k) : k_(k) {
    if (k < 1) throw std::invalid_argument("PerpConditions: degree must be >= 1");
}

size_t PerpConditions::rank() const {
    const size_t n = static_cast<size_t>(k_) + 1;
    Matrix<Rational> f(4, n * n);
    for (size_t r = 0; r < n; ++r) {
        f.at(0, r * n + r) = Rational(1);
        f.at(1, r * n + r) = Rational(k_ - 2 * static_cast<long>(r));
        if (r + 1 < n) {
            f.at(2, r * n + (r + 1)) = Rational(k_ - static_cast<long>(r));
            f.at(3, (r + 1) * n + r) = Rational(static_cast<long>(r) + 1);
        }
    }
    return f.rank();
}

namespace {

/// Homogeneous alteration of a unit correction: the matrix, over the
/// rationals, of l -> Psi(e_j) e_l - Psi(e_l) e_j when the correction is 1
/// on (slot, m) and 0 elsewhere.
Matrix<Rational> unit_alteration(int k, const Matrix<Rational>& band, int m, int j) {
    const size_t n = static_cast<size_t>(k) + 1;
    Matrix<Rational> out(n, n);
    // Psi(e_j) e_l: whole band matrix when j == m.
    if (j == m) out = band;
    // -Psi(e_l) e_j: only column l == m receives -band column j.
    for (size_t r = 0; r < n; ++r)
        out.at(r, static_cast<size_t>(m)) -= band.at(r, static_cast<size_t>(j));
    return out;
}

Matrix<Rational> band_matrix(int k, int slot_r, int slot_c) {
    std::array<std::array<Rational, 2>, 2> phi{};
    phi[static_cast<size_t>(slot_r)][static_cast<size_t>(slot_c)] = Rational(1);
    return algebra_rep<Rational>(k, phi);
}

Matrix<Rational> build_system(int k) {
    const size_t dim = 4 * (static_cast<size_t>(k) + 1);
    const PerpConditions perp(k);
    Matrix<Rational> sys(dim, dim);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            const Matrix<Rational> band = band_matrix(k, r, c);
            for (int m = 0; m <= k; ++m) {
                const size_t u = static_cast<size_t>((2 * r + c) * (k + 1) + m);
                for (int j = 0; j <= k; ++j) {
                    const Matrix<Rational> alt = unit_alteration(k, band, m, j);
                    for (int f = 0; f < 4; ++f)
                        sys.at(static_cast<size_t>(4 * j + f), u) = perp.eval(f, alt);
                }
            }
        }
    return sys;
}

}  // namespace

NormalizationOperator::NormalizationOperator(int k) : k_(k) {
    if (k < 3)
        throw std::domain_error(
            "NormalizationOperator: degree must be >= 3 (the normalization system is singular "
            "below, its determinant carries a factor k-2)");
    system_ = build_system(k);
    inverse_ = system_.inverse();
}

std::shared_ptr<const NormalizationOperator> NormalizationOperator::for_degree(int k) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const NormalizationOperator>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, std::make_shared<NormalizationOperator>(k)).first;
    return it->second;
}

Rational block_determinant_closed_form(int k) {
    const Rational kk(k);
    return Rational(k - 2) * Rational(k - 1) * Rational(k - 1) * kk * kk * kk * Rational(k + 2) *
           Rational(k + 3) * Rational(k + 4) * Rational(static_cast<long>(k) * k + k + 6) /
           Rational(216);
}

BlockReport block_determinant(int k) {
    if (k < 1) throw std::invalid_argument("block_determinant: degree must be >= 1");
    const Matrix<Rational> sys = build_system(k);
    const size_t dim = sys.rows();

    // Connected components of the bipartite support graph (equations vs
    // unknowns sharing a nonzero coefficient).
    std::vector<size_t> parent(2 * dim);
    std::iota(parent.begin(), parent.end(), size_t{0});
    std::function<size_t(size_t)> find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](size_t a, size_t b) { parent[find(a)] = find(b); };
    for (size_t e = 0; e < dim; ++e)
        for (size_t u = 0; u < dim; ++u)
            if (!sys.at(e, u).is_zero()) unite(e, dim + u);

    // Canonical in-block order: equations by (functional, contraction
    // index); unknowns by 2x2 slot -- diagonal entries first, then the
    // raising entry, then the lowering one -- and by frame index. The
    // equation and unknown sets of a block are intrinsic; this order fixes
    // the determinant sign.
    const size_t stride = static_cast<size_t>(k) + 1;
    auto eq_rank = [&](size_t e) { return (e % 4) * dim + e / 4; };
    const size_t slot_rank[4] = {0, 3, 2, 1};  // slots 00, 01, 10, 11
    auto un_rank = [&](size_t u) { return slot_rank[u / stride] * stride + u % stride; };

    std::map<size_t, BlockInfo> comp;
    for (size_t e = 0; e < dim; ++e) {
        bool nonempty = false;
        for (size_t u = 0; u < dim; ++u) nonempty = nonempty || !sys.at(e, u).is_zero();
        if (nonempty) comp[find(e)].equations.push_back(e);
    }
    for (size_t u = 0; u < dim; ++u) {
        bool nonempty = false;
        for (size_t e = 0; e < dim; ++e) nonempty = nonempty || !sys.at(e, u).is_zero();
        if (nonempty) comp[find(dim + u)].unknowns.push_back(u);
    }
    for (auto& [root, info] : comp) {
        std::sort(info.equations.begin(), info.equations.end(),
                  [&](size_t a, size_t b) { return eq_rank(a) < eq_rank(b); });
        std::sort(info.unknowns.begin(), info.unknowns.end(),
                  [&](size_t a, size_t b) { return un_rank(a) < un_rank(b); });
    }

    BlockReport report;
    report.k = k;
    report.full_det = sys.determinant();

    std::vector<Rational> dets4;
    bool square_blocks = true;
    for (auto& [root, info] : comp) {
        if (info.equations.size() != info.unknowns.size()) {
            square_blocks = false;
            continue;
        }
        const size_t s = info.equations.size();
        Matrix<Rational> sub(s, s);
        for (size_t a = 0; a < s; ++a)
            for (size_t b = 0; b < s; ++b) sub.at(a, b) = sys.at(info.equations[a], info.unknowns[b]);
        info.det = sub.determinant();
        if (s == 4) dets4.push_back(info.det);
        report.blocks.push_back(info);
    }

    // Expected partition: k-1 interior 4x4 blocks, two 3x3, two 1x1.
    size_t n4 = 0, n3 = 0, n1 = 0, other = 0;
    for (const auto& b : report.blocks) {
        if (b.equations.size() == 4)
            ++n4;
        else if (b.equations.size() == 3)
            ++n3;
        else if (b.equations.size() == 1)
            ++n1;
        else
            ++other;
    }
    const bool counts_ok =
        square_blocks && other == 0 && n3 == 2 && n1 == 2 && n4 == static_cast<size_t>(k) - 1;
    const bool dets_agree =
        !dets4.empty() && std::all_of(dets4.begin(), dets4.end(),
                                      [&](const Rational& d) { return d == dets4.front(); });
    report.shape_ok = counts_ok && dets_agree;
    if (dets_agree) report.common_det = dets4.front();
    return report;
}

}  // namespace gl2
