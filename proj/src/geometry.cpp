#include "gl2/geometry.hpp"

#include <stdexcept>

namespace gl2 {

namespace {

Matrix<RatFunc> lift(const Matrix<GaussRational>& m) {
    Matrix<RatFunc> out(m.rows(), m.cols());
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) out.at(r, c) = RatFunc(m.at(r, c));
    return out;
}

}  // namespace

Gl2Structure::Gl2Structure(int degree, Coframe cf) : k(degree), coframe(std::move(cf)) {
    if (k < 1) throw std::invalid_argument("Gl2Structure: degree must be >= 1");
    if (coframe.size() != k + 1 || coframe.patch().dim() != k + 1)
        throw std::invalid_argument("Gl2Structure: coframe must have k+1 entries on a (k+1)-patch");
}

Gl2Structure flat_structure(int k) {
    Patch patch(k + 1);
    std::vector<DForm> forms;
    forms.reserve(static_cast<size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) forms.push_back(DForm::dp(patch, i));
    return Gl2Structure(k, Coframe(patch, std::move(forms)));
}

Gl2Structure shear_structure(int k) {
    if (k < 2) throw std::invalid_argument("shear_structure: degree must be >= 2");
    Patch patch(k + 1);
    std::vector<DForm> forms;
    forms.reserve(static_cast<size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) forms.push_back(DForm::dp(patch, i));
    forms[0] += RatFunc::variable(patch.var(1)) * DForm::dp(patch, 2);
    return Gl2Structure(k, Coframe(patch, std::move(forms)));
}

Gl2Structure veronese_structure(const std::vector<DForm>& omega) {
    if (omega.size() < 2) throw std::invalid_argument("veronese_structure: need at least two forms");
    const int k = static_cast<int>(omega.size()) - 1;
    const Patch& patch = omega.front().patch();
    std::vector<DForm> forms;
    forms.reserve(omega.size());
    for (int i = 0; i <= k; ++i) {
        DForm f = omega[static_cast<size_t>(k - i)];
        if (i % 2 == 1) f = -f;
        forms.push_back(std::move(f));
    }
    Gl2Structure s(k, Coframe(patch, std::move(forms)));
    // Pointwise independence, at least generically: the kernel-curve
    // construction needs independent input forms.
    try {
        s.coframe.inverse_coefficient_matrix();
    } catch (const std::domain_error&) {
        throw std::domain_error("veronese_structure: input forms are dependent");
    }
    return s;
}

DForm connection_band_entry(int k, const ConnectionOnSection& conn, int r, int c) {
    const Patch& patch = conn.phi[0][0].patch();
    DForm out(patch, 1);
    if (c == r) {
        out += RatFunc(Rational(k - r)) * conn.phi[0][0];
        out += RatFunc(Rational(r)) * conn.phi[1][1];
    } else if (c == r - 1) {
        out += RatFunc(Rational(k - c)) * conn.phi[1][0];
    } else if (c == r + 1) {
        out += RatFunc(Rational(c)) * conn.phi[0][1];
    }
    return out;
}

TorsionTensor<RatFunc> torsion_of_connection(const Gl2Structure& s, const ConnectionOnSection& conn) {
    const int k = s.k;
    const Matrix<RatFunc> ainv = s.coframe.inverse_coefficient_matrix();
    TorsionTensor<RatFunc> t(k);
    for (int i = 0; i <= k; ++i) {
        DForm theta = ext_d(s.coframe.form(i));
        for (int c = 0; c <= k; ++c) {
            if (c != i && c != i - 1 && c != i + 1) continue;
            const DForm entry = connection_band_entry(k, conn, i, c);
            if (entry.is_zero()) continue;
            theta += wedge(entry, s.coframe.form(c));
        }
        const Matrix<RatFunc> comp = two_form_in_coframe(theta, ainv);
        for (int j = 0; j <= k; ++j)
            for (int l = j + 1; l <= k; ++l)
                if (!comp.at(static_cast<size_t>(j), static_cast<size_t>(l)).is_zero())
                    t.add(i, j, l, comp.at(static_cast<size_t>(j), static_cast<size_t>(l)));
    }
    return t;
}

CanonicalConnectionResult canonical_connection(const Gl2Structure& s) {
    const int k = s.k;
    if (k < 3) throw std::domain_error("canonical_connection: degree must be >= 3");
    const auto op = NormalizationOperator::for_degree(k);
    const TorsionTensor<RatFunc> raw = structure_functions(s.coframe);
    ConnectionCorrection<RatFunc> psi = op->solve(raw);

    const Patch& patch = s.coframe.patch();
    ConnectionOnSection conn{{{{DForm(patch, 1), DForm(patch, 1)}, {DForm(patch, 1), DForm(patch, 1)}}}};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            for (int m = 0; m <= k; ++m) {
                const RatFunc& v = psi.slot[static_cast<size_t>(r)][static_cast<size_t>(c)][static_cast<size_t>(m)];
                if (!v.is_zero())
                    conn.phi[static_cast<size_t>(r)][static_cast<size_t>(c)] += v * s.coframe.form(m);
            }

    TorsionTensor<RatFunc> corrected = apply_correction(raw, psi);
    CanonicalConnectionResult out{k, conn, std::move(psi), std::move(corrected), false, false};
    // The corrected tensor must agree with the torsion recomputed from the
    // structure equation; this pins every sign convention in the pipeline.
    const TorsionTensor<RatFunc> direct = torsion_of_connection(s, out.connection);
    out.residual_zero = (direct == out.torsion);

    const PerpConditions perp(k);
    out.perp_identically = true;
    for (int j = 0; j <= k && out.perp_identically; ++j)
        out.perp_identically = perp.all_zero(out.torsion.contraction(j));
    return out;
}

std::array<std::array<DForm, 2>, 2> curvature(const ConnectionOnSection& conn) {
    const Patch& patch = conn.phi[0][0].patch();
    std::array<std::array<DForm, 2>, 2> om{
        {{DForm(patch, 2), DForm(patch, 2)}, {DForm(patch, 2), DForm(patch, 2)}}};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            DForm v = ext_d(conn.phi[static_cast<size_t>(r)][static_cast<size_t>(c)]);
            for (int t = 0; t < 2; ++t)
                v += wedge(conn.phi[static_cast<size_t>(r)][static_cast<size_t>(t)],
                           conn.phi[static_cast<size_t>(t)][static_cast<size_t>(c)]);
            om[static_cast<size_t>(r)][static_cast<size_t>(c)] = std::move(v);
        }
    return om;
}

ComplexBlocks::BlockKind ComplexBlocks::classify(int b, int c) const {
    const bool hb = is_holomorphic(b), hc = is_holomorphic(c);
    if (hb && hc) return BlockKind::kHolHol;
    if (!hb && !hc) return BlockKind::kAntiAnti;
    return BlockKind::kMixed;
}

std::vector<RatFunc> ComplexBlocks::torsion_block(BlockKind kind) const {
    std::vector<RatFunc> out;
    for (int a = 0; a < pairs; ++a)
        for (int b = 0; b <= k; ++b)
            for (int c = b + 1; c <= k; ++c)
                if (classify(b, c) == kind)
                    out.push_back(torsion[static_cast<size_t>(a)].at(static_cast<size_t>(b),
                                                                     static_cast<size_t>(c)));
    return out;
}

std::vector<RatFunc> ComplexBlocks::curvature_block(BlockKind kind) const {
    std::vector<RatFunc> out;
    for (int b = 0; b <= k; ++b)
        for (int c = b + 1; c <= k; ++c)
            if (classify(b, c) == kind)
                out.push_back(curvature.at(static_cast<size_t>(b), static_cast<size_t>(c)));
    return out;
}

namespace {

/// zeta combination of a 2x2 matrix of forms:
/// (m[1][0] + m[0][1]) + i (m[1][1] - m[0][0]); `sign` -1 builds the
/// conjugate-trace combination.
DForm zeta_combination(const std::array<std::array<DForm, 2>, 2>& m, int sign) {
    const RatFunc iu = RatFunc(GaussRational::i()) * RatFunc(Rational(sign));
    DForm out = m[1][0] + m[0][1];
    out += iu * (m[1][1] - m[0][0]);
    return out;
}

}  // namespace

ComplexBlocks complex_decomposition(const Gl2Structure& s, const TorsionTensor<RatFunc>& torsion,
                                    const std::array<std::array<DForm, 2>, 2>& omega) {
    const int k = s.k;
    if (k % 2 == 0)
        throw std::domain_error("complex_decomposition: even degree is unsupported (odd k only)");
    const ComplexBasisChange basis = complex_basis_change(k);
    const size_t n = static_cast<size_t>(k) + 1;

    ComplexBlocks out;
    out.k = k;
    out.pairs = basis.pair_count();

    // Value transform by the frame rows, then form congruence.
    std::vector<Matrix<RatFunc>> value_rows(n, Matrix<RatFunc>(n, n));
    for (int r = 0; r <= k; ++r) {
        const Matrix<RatFunc> vm = torsion.value_matrix(r);
        for (size_t a = 0; a < n; ++a) {
            if (basis.frame.at(a, static_cast<size_t>(r)).is_zero()) continue;
            const RatFunc w{basis.frame.at(a, static_cast<size_t>(r))};
            for (size_t j = 0; j < n; ++j)
                for (size_t l = 0; l < n; ++l)
                    if (!vm.at(j, l).is_zero()) value_rows[a].at(j, l) += w * vm.at(j, l);
        }
    }
    out.torsion.reserve(n);
    for (size_t a = 0; a < n; ++a)
        out.torsion.push_back(to_complex_two_form(basis, value_rows[a]));

    const Matrix<RatFunc> ainv = s.coframe.inverse_coefficient_matrix();
    const DForm omz = zeta_combination(omega, +1);
    const DForm omz_bar = zeta_combination(omega, -1);
    out.curvature = to_complex_two_form(basis, two_form_in_coframe(omz, ainv));
    out.curvature_conj = to_complex_two_form(basis, two_form_in_coframe(omz_bar, ainv));
    return out;
}

std::vector<Matrix<RatFunc>> complex_torsion_direct(const Gl2Structure& s,
                                                    const ConnectionOnSection& conn) {
    const int k = s.k;
    if (k % 2 == 0) throw std::domain_error("complex_torsion_direct: odd k only");
    const ComplexBasisChange basis = complex_basis_change(k);
    const size_t n = static_cast<size_t>(k) + 1;
    const Patch& patch = s.coframe.patch();

    // Complex coframe rows pulled to the patch.
    std::vector<DForm> eps;
    eps.reserve(n);
    for (size_t a = 0; a < n; ++a) {
        DForm f(patch, 1);
        for (size_t i = 0; i < n; ++i)
            if (!basis.frame.at(a, i).is_zero())
                f += RatFunc(basis.frame.at(a, i)) * s.coframe.form(static_cast<int>(i));
        eps.push_back(std::move(f));
    }

    // Connection in the complex frame: Lambda = S Phi S^{-1}.
    std::vector<std::vector<DForm>> lambda(n, std::vector<DForm>(n, DForm(patch, 1)));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            DForm acc(patch, 1);
            for (size_t i = 0; i < n; ++i) {
                if (basis.frame.at(a, i).is_zero()) continue;
                for (size_t j = 0; j < n; ++j) {
                    if (basis.inverse.at(j, b).is_zero()) continue;
                    const DForm entry =
                        connection_band_entry(k, conn, static_cast<int>(i), static_cast<int>(j));
                    if (entry.is_zero()) continue;
                    acc += (RatFunc(basis.frame.at(a, i)) * RatFunc(basis.inverse.at(j, b))) * entry;
                }
            }
            lambda[a][b] = std::move(acc);
        }

    // Combined change of basis from coordinate differentials to the complex
    // coframe.
    const Matrix<RatFunc> cinv = s.coframe.inverse_coefficient_matrix() * lift(basis.inverse);

    std::vector<Matrix<RatFunc>> out;
    out.reserve(n);
    for (size_t a = 0; a < n; ++a) {
        DForm theta = ext_d(eps[a]);
        for (size_t b = 0; b < n; ++b) {
            if (lambda[a][b].is_zero()) continue;
            theta += wedge(lambda[a][b], eps[b]);
        }
        out.push_back(two_form_in_coframe(theta, cinv));
    }
    return out;
}

Matrix<RatFunc> curvature_blocks_direct(const Gl2Structure& s, const ConnectionOnSection& conn) {
    const int k = s.k;
    if (k % 2 == 0) throw std::domain_error("curvature_blocks_direct: odd k only");
    const ComplexBasisChange basis = complex_basis_change(k);

    const DForm zeta = zeta_combination(conn.phi, +1);
    // d zeta - i zeta ^ (phi^1_2 - phi^2_1) equals the zeta-trace of the
    // curvature on the section.
    DForm om = ext_d(zeta);
    const DForm diff = conn.phi[1][0] - conn.phi[0][1];
    om -= RatFunc(GaussRational::i()) * wedge(zeta, diff);
    const Matrix<RatFunc> cinv = s.coframe.inverse_coefficient_matrix() * lift(basis.inverse);
    return two_form_in_coframe(om, cinv);
}

AnalysisReport integrability_report(const Gl2Structure& s, const std::vector<PatchPoint>& points) {
    if (s.k % 2 == 0)
        throw std::domain_error("integrability_report: even degree is unsupported (odd k only)");
    CanonicalConnectionResult ccr = canonical_connection(s);
    std::array<std::array<DForm, 2>, 2> om = curvature(ccr.connection);
    ComplexBlocks blocks = complex_decomposition(s, ccr.torsion, om);
    AnalysisReport rep{s.k, std::move(ccr), std::move(om), std::move(blocks)};

    auto all_zero = [](const std::vector<RatFunc>& v) {
        for (const auto& f : v)
            if (!f.is_zero()) return false;
        return true;
    };
    rep.t02_identically_zero = all_zero(rep.blocks.torsion_block(ComplexBlocks::BlockKind::kAntiAnti));
    rep.c02_identically_zero = all_zero(rep.blocks.curvature_block(ComplexBlocks::BlockKind::kAntiAnti));
    rep.integrable_identically = rep.t02_identically_zero && rep.c02_identically_zero;

    // Reality: with a real coframe the conjugate value rows carry the
    // conjugate components under the block swap a -> a +/- pairs.
    rep.input_real = true;
    const Matrix<RatFunc> a = s.coframe.coefficient_matrix();
    for (size_t r = 0; r < a.rows() && rep.input_real; ++r)
        for (size_t c = 0; c < a.cols() && rep.input_real; ++c)
            rep.input_real = (a.at(r, c) == a.at(r, c).conj());
    rep.reality_ok = true;
    if (rep.input_real) {
        const int n = s.k + 1;
        const int q = rep.blocks.pairs;
        auto swap_idx = [&](int x) { return x < q ? x + q : x - q; };
        for (int va = 0; va < n && rep.reality_ok; ++va)
            for (int b = 0; b < n && rep.reality_ok; ++b)
                for (int c = 0; c < n && rep.reality_ok; ++c) {
                    const RatFunc& lhs = rep.blocks.torsion[static_cast<size_t>(va)].at(
                        static_cast<size_t>(b), static_cast<size_t>(c));
                    const RatFunc rhs =
                        rep.blocks.torsion[static_cast<size_t>(swap_idx(va))]
                            .at(static_cast<size_t>(swap_idx(b)), static_cast<size_t>(swap_idx(c)))
                            .conj();
                    rep.reality_ok = (lhs == rhs);
                }
        for (int b = 0; b < n && rep.reality_ok; ++b)
            for (int c = 0; c < n && rep.reality_ok; ++c) {
                const RatFunc& lhs = rep.blocks.curvature.at(static_cast<size_t>(b), static_cast<size_t>(c));
                const RatFunc rhs = rep.blocks.curvature_conj
                                        .at(static_cast<size_t>(swap_idx(b)), static_cast<size_t>(swap_idx(c)))
                                        .conj();
                rep.reality_ok = (lhs == rhs);
            }
    }

    const Patch& patch = s.coframe.patch();
    for (const auto& point : points) {
        PointVerdict v;
        v.point = point;
        try {
            if (static_cast<int>(point.size()) != patch.dim())
                throw std::invalid_argument("point dimension mismatch");
            std::map<std::string, GaussRational, VarLess> vals;
            for (int i = 0; i < patch.dim(); ++i)
                vals.emplace(patch.var(i), GaussRational(point[static_cast<size_t>(i)]));
            auto block_zero = [&](const std::vector<RatFunc>& blk) {
                for (const auto& f : blk)
                    if (!f.evaluate(vals).is_zero()) return false;
                return true;
            };
            v.t02_zero = block_zero(rep.blocks.torsion_block(ComplexBlocks::BlockKind::kAntiAnti));
            v.t11_zero = block_zero(rep.blocks.torsion_block(ComplexBlocks::BlockKind::kMixed));
            v.c02_zero = block_zero(rep.blocks.curvature_block(ComplexBlocks::BlockKind::kAntiAnti));
            v.integrable = v.t02_zero && v.c02_zero;
            v.implication_ok = !(v.t11_zero && v.t02_zero) || v.c02_zero;
            v.evaluated = true;
        } catch (const std::exception& e) {
            v.evaluated = false;
            v.error = e.what();
        }
        rep.verdicts.push_back(std::move(v));
    }
    return rep;
}

}  // namespace gl2
