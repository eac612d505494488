#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gl2/geometry.hpp"

using namespace gl2;

namespace {

using Rng = std::mt19937_64;

Rational rand_rational(Rng& rng, int lo = -6, int hi = 6, int max_den = 4) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

/// Flat coframe with one quadratic perturbation; torsion and curvature
/// genuinely depend on the point.
Gl2Structure quadratic_structure() {
    Gl2Structure s = shear_structure(3);
    const Patch& patch = s.coframe.patch();
    std::vector<DForm> forms = s.coframe.forms();
    const MultiPoly p1 = MultiPoly::variable(patch.var(1));
    forms[1] += RatFunc(p1 * p1) * DForm::dp(patch, 3);
    return Gl2Structure(3, Coframe(patch, forms));
}

Rational binom(int n, int k) {
    Rational r(1);
    for (int i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
    return r;
}

}  // namespace

TEST_CASE("flat structures have a vanishing canonical connection") {
    for (int k : {3, 5}) {
        const auto res = canonical_connection(flat_structure(k));
        CHECK(res.psi.is_zero());
        CHECK(res.torsion.is_zero());
        CHECK(res.residual_zero);
        CHECK(res.perp_identically);
        const auto om = curvature(res.connection);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                CHECK(om[static_cast<size_t>(r)][static_cast<size_t>(c)].is_zero());
    }
    CHECK_THROWS_AS(canonical_connection(flat_structure(2)), std::domain_error);
}

TEST_CASE("canonical connection of the perturbed structures") {
    for (const Gl2Structure& s : {shear_structure(3), quadratic_structure()}) {
        const auto res = canonical_connection(s);
        CHECK(res.residual_zero);
        CHECK(res.perp_identically);
        CHECK(!res.torsion.is_zero());
        // The canonical torsion is a fixed point of the solver.
        CHECK(NormalizationOperator::for_degree(3)->solve(res.torsion).is_zero());
    }
}

TEST_CASE("perturbed degree-5 structure") {
    const auto res = canonical_connection(shear_structure(5));
    CHECK(res.residual_zero);
    CHECK(res.perp_identically);
}

TEST_CASE("curvature of a constant-coefficient connection is the quadratic part") {
    const Patch patch(4);
    Rng rng(9901);
    ConnectionOnSection conn{
        {{{DForm(patch, 1), DForm(patch, 1)}, {DForm(patch, 1), DForm(patch, 1)}}}};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            for (int i = 0; i < 4; ++i)
                conn.phi[static_cast<size_t>(r)][static_cast<size_t>(c)] +=
                    RatFunc(rand_rational(rng)) * DForm::dp(patch, i);
    const auto om = curvature(conn);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            DForm quad(patch, 2);
            for (int t = 0; t < 2; ++t)
                quad += wedge(conn.phi[static_cast<size_t>(r)][static_cast<size_t>(t)],
                              conn.phi[static_cast<size_t>(t)][static_cast<size_t>(c)]);
            CHECK(om[static_cast<size_t>(r)][static_cast<size_t>(c)] == quad);
        }
}

TEST_CASE("second bianchi identity for the 2x2 curvature") {
    for (const Gl2Structure& s : {shear_structure(3), quadratic_structure()}) {
        const auto res = canonical_connection(s);
        const auto om = curvature(res.connection);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                DForm lhs = ext_d(om[static_cast<size_t>(r)][static_cast<size_t>(c)]);
                DForm rhs(s.coframe.patch(), 3);
                for (int t = 0; t < 2; ++t) {
                    rhs += wedge(om[static_cast<size_t>(r)][static_cast<size_t>(t)],
                                 res.connection.phi[static_cast<size_t>(t)][static_cast<size_t>(c)]);
                    rhs -= wedge(res.connection.phi[static_cast<size_t>(r)][static_cast<size_t>(t)],
                                 om[static_cast<size_t>(t)][static_cast<size_t>(c)]);
                }
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("direct expansions agree with the tensor transforms") {
    // Point-dependent case: the two routes to the complex blocks share no
    // code beyond the exterior algebra itself.
    const Gl2Structure s = quadratic_structure();
    const auto rep = integrability_report(s, {});
    const auto direct = complex_torsion_direct(s, rep.connection.connection);
    REQUIRE(direct.size() == rep.blocks.torsion.size());
    for (size_t a = 0; a < direct.size(); ++a) CHECK(direct[a] == rep.blocks.torsion[a]);
    CHECK(curvature_blocks_direct(s, rep.connection.connection) == rep.blocks.curvature);
}

TEST_CASE("gauge covariance under constant frame changes") {
    Rng rng(9902);
    const Gl2Structure s = shear_structure(3);
    const auto base = canonical_connection(s);

    Gl2Matrix g = Gl2Matrix::zero();
    do {
        g = Gl2Matrix(GaussRational(rand_rational(rng)), GaussRational(rand_rational(rng)),
                      GaussRational(rand_rational(rng)), GaussRational(rand_rational(rng)));
    } while (g.det().is_zero());
    const auto r = group_rep(3, g);
    const auto rinv = r.inverse();

    std::vector<DForm> transformed;
    for (int i = 0; i <= 3; ++i) {
        DForm f(s.coframe.patch(), 1);
        for (int j = 0; j <= 3; ++j) {
            const GaussRational& w = r.at(static_cast<size_t>(i), static_cast<size_t>(j));
            if (!w.is_zero()) f += RatFunc(w) * s.coframe.form(j);
        }
        transformed.push_back(std::move(f));
    }
    const Gl2Structure st(3, Coframe(s.coframe.patch(), transformed));
    const auto moved = canonical_connection(st);
    CHECK(moved.residual_zero);
    CHECK(moved.perp_identically);

    // Connection conjugates: phi' = g phi g^{-1}.
    const Gl2Matrix ginv = g.inverse();
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            DForm want(s.coframe.patch(), 1);
            for (int x = 0; x < 2; ++x)
                for (int y = 0; y < 2; ++y) {
                    const GaussRational w = g.at(a, x) * ginv.at(y, b);
                    if (!w.is_zero())
                        want += RatFunc(w) * base.connection.phi[static_cast<size_t>(x)][static_cast<size_t>(y)];
                }
            CHECK(moved.connection.phi[static_cast<size_t>(a)][static_cast<size_t>(b)] == want);
        }

    // Curvature conjugates along with the connection.
    const auto om_base = curvature(base.connection);
    const auto om_moved = curvature(moved.connection);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            DForm want(s.coframe.patch(), 2);
            for (int x = 0; x < 2; ++x)
                for (int y = 0; y < 2; ++y) {
                    const GaussRational w = g.at(a, x) * ginv.at(y, b);
                    if (!w.is_zero())
                        want += RatFunc(w) * om_base[static_cast<size_t>(x)][static_cast<size_t>(y)];
                }
            CHECK(om_moved[static_cast<size_t>(a)][static_cast<size_t>(b)] == want);
        }

    // Torsion transforms tensorially on all three indices.
    for (int rr = 0; rr <= 3; ++rr)
        for (int j = 0; j <= 3; ++j)
            for (int l = j + 1; l <= 3; ++l) {
                RatFunc want(0);
                for (int ss = 0; ss <= 3; ++ss)
                    for (int a = 0; a <= 3; ++a)
                        for (int b = 0; b <= 3; ++b) {
                            const GaussRational w =
                                r.at(static_cast<size_t>(rr), static_cast<size_t>(ss)) *
                                rinv.at(static_cast<size_t>(a), static_cast<size_t>(j)) *
                                rinv.at(static_cast<size_t>(b), static_cast<size_t>(l));
                            if (w.is_zero()) continue;
                            want += RatFunc(w) * base.torsion.get(ss, a, b);
                        }
                CHECK(moved.torsion.get(rr, j, l) == want);
            }
}

TEST_CASE("kernel-curve structures") {
    // Flat input: constant coframe, zero torsion.
    const Patch patch(4);
    std::vector<DForm> omega;
    for (int i = 0; i < 4; ++i) omega.push_back(DForm::dp(patch, i));
    const Gl2Structure s = veronese_structure(omega);
    CHECK(structure_functions(s.coframe).is_zero());
    CHECK(canonical_connection(s).torsion.is_zero());

    // Dependent input forms are rejected.
    std::vector<DForm> dep = omega;
    dep[3] = omega[0] + omega[1];
    CHECK_THROWS_AS(veronese_structure(dep), std::domain_error);

    // The defining duality: for a constant invertible table, the kernel of
    // (omega(t), omega'(t), ..., omega^(k-1)(t)) pairs with the coframe as
    // the binomial powers of t, projectively.
    Rng rng(9903);
    const int k = 3;
    Matrix<GaussRational> table(4, 4);
    do {
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j) table.at(i, j) = GaussRational(rand_rational(rng));
    } while (table.determinant().is_zero());
    std::vector<DForm> general;
    for (size_t i = 0; i < 4; ++i) {
        DForm f(patch, 1);
        for (size_t j = 0; j < 4; ++j)
            if (!table.at(i, j).is_zero()) f += RatFunc(table.at(i, j)) * DForm::dp(patch, static_cast<int>(j));
        general.push_back(std::move(f));
    }
    const Gl2Structure sv = veronese_structure(general);
    const auto eta = sv.coframe.coefficient_matrix();
    for (const Rational& t : {Rational(0), Rational(1), Rational(-2), Rational(1, 2)}) {
        // Solve for the kernel vector: f_Y(s) = sum_i s^i omega_i(Y) must
        // vanish to order k at s = t, i.e. equal c (s - t)^k.
        // Build Y from the explicit flat kernel and the table inverse.
        std::vector<GaussRational> flat_kernel(4);
        for (int i = 0; i <= k; ++i)
            flat_kernel[static_cast<size_t>(i)] =
                GaussRational(binom(k, i) * (-t).pow(k - i));
        const auto v = table.inverse().apply(flat_kernel);
        // Derivative conditions at s = t.
        for (int m = 0; m < k; ++m) {
            GaussRational cond(0);
            for (int i = m; i <= k; ++i) {
                Rational fall(1);
                for (int x = 0; x < m; ++x) fall = fall * Rational(i - x);
                GaussRational omega_i_v(0);
                for (size_t j = 0; j < 4; ++j) omega_i_v += table.at(static_cast<size_t>(i), j) * v[j];
                cond += GaussRational(fall * t.pow(i - m)) * omega_i_v;
            }
            CHECK(cond.is_zero());
        }
        // Pairing with the coframe is proportional to (binom(k,i) t^i)_i.
        std::vector<GaussRational> pairing(4);
        for (size_t i = 0; i < 4; ++i) {
            GaussRational acc(0);
            for (size_t j = 0; j < 4; ++j) {
                const RatFunc& w = eta.at(i, j);
                if (!w.is_zero()) acc += w.constant_value() * v[j];
            }
            pairing[i] = acc;
        }
        std::vector<GaussRational> want(4);
        for (int i = 0; i <= k; ++i) want[static_cast<size_t>(i)] = GaussRational(binom(k, i) * t.pow(i));
        // Projective comparison.
        for (size_t a = 0; a < 4; ++a)
            for (size_t b = 0; b < 4; ++b)
                CHECK(pairing[a] * want[b] == pairing[b] * want[a]);
    }
}

TEST_CASE("analysis error paths and verdicts") {
    CHECK_THROWS_AS(integrability_report(flat_structure(4), {}), std::domain_error);

    const auto rep = integrability_report(flat_structure(3), {});
    CHECK(rep.verdicts.empty());
    CHECK(rep.integrable_identically);

    // Rational-function coframe with a pole: the analysis succeeds away
    // from it and reports a per-point error on it.
    const Patch patch(4);
    std::vector<DForm> forms;
    for (int i = 0; i < 4; ++i) forms.push_back(DForm::dp(patch, i));
    forms[0] += (RatFunc::variable("p1") / RatFunc::variable("p0")) * DForm::dp(patch, 2);
    const Gl2Structure s(3, Coframe(patch, forms));
    const PatchPoint good{Rational(1), Rational(2), Rational(0), Rational(0)};
    const PatchPoint bad{Rational(0), Rational(1), Rational(0), Rational(0)};
    const auto rep2 = integrability_report(s, {good, bad});
    REQUIRE(rep2.verdicts.size() == 2);
    CHECK(rep2.verdicts[0].evaluated);
    CHECK(rep2.verdicts[0].implication_ok);
    CHECK(!rep2.verdicts[1].evaluated);
    CHECK(!rep2.verdicts[1].error.empty());
}

TEST_CASE("structure construction guards") {
    CHECK_THROWS_AS(shear_structure(1), std::invalid_argument);
    const Patch patch(3);
    std::vector<DForm> forms;
    for (int i = 0; i < 3; ++i) forms.push_back(DForm::dp(patch, i));
    CHECK_THROWS_AS(Gl2Structure(3, Coframe(patch, forms)), std::invalid_argument);
}
