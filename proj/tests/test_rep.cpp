#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gl2/rep.hpp"

using namespace gl2;

namespace {

using Rng = std::mt19937_64;

Rational rand_rational(Rng& rng, int lo = -9, int hi = 9, int max_den = 9) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

Gl2Matrix rand_matrix(Rng& rng) {
    return Gl2Matrix(GaussRational(rand_rational(rng)), GaussRational(rand_rational(rng)),
                     GaussRational(rand_rational(rng)), GaussRational(rand_rational(rng)));
}

}  // namespace

TEST_CASE("algebra representation band pattern") {
    // Lowering generator at k = 3: subdiagonal (3, 2, 1).
    const auto m = algebra_rep(3, Gl2Matrix::elementary(1, 2));
    for (size_t r = 0; r < 4; ++r)
        for (size_t c = 0; c < 4; ++c) {
            if (r == c + 1)
                CHECK(m.at(r, c) == GaussRational(static_cast<int>(4 - r)));
            else
                CHECK(m.at(r, c).is_zero());
        }

    for (int k = 1; k <= 7; ++k)
        CHECK(algebra_rep(k, Gl2Matrix::identity()) ==
              Matrix<GaussRational>::identity(static_cast<size_t>(k) + 1).scaled(GaussRational(k)));

    // Degree one reproduces the 2x2 entries verbatim.
    Rng rng(4401);
    const Gl2Matrix phi = rand_matrix(rng);
    const auto m1 = algebra_rep(1, phi);
    CHECK(m1.at(0, 0) == phi.phi(1, 1));
    CHECK(m1.at(0, 1) == phi.phi(2, 1));
    CHECK(m1.at(1, 0) == phi.phi(1, 2));
    CHECK(m1.at(1, 1) == phi.phi(2, 2));
}

TEST_CASE("group representation on monomial eigenvectors") {
    CHECK(group_rep(4, Gl2Matrix::identity()) == Matrix<GaussRational>::identity(5));

    const GaussRational l(2), mu(Rational(1, 3));
    const auto d = group_rep(3, Gl2Matrix::diagonal(l, mu));
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j) {
            const GaussRational want =
                i == j ? l.pow(3 - i) * mu.pow(i) : GaussRational(0);
            CHECK(d.at(static_cast<size_t>(i), static_cast<size_t>(j)) == want);
        }

    // Column of x^2 under the shear-rotation mix: x -> x + y gives (1,2,1).
    const auto m = group_rep(2, Gl2Matrix(GaussRational(1), GaussRational(-1), GaussRational(1),
                                          GaussRational(1)));
    CHECK(m.at(0, 0) == GaussRational(1));
    CHECK(m.at(1, 0) == GaussRational(2));
    CHECK(m.at(2, 0) == GaussRational(1));

    CHECK_THROWS_AS(group_rep(2, Gl2Matrix::zero()), std::domain_error);
}

TEST_CASE("group representation is multiplicative") {
    Rng rng(4402);
    for (int k = 1; k <= 5; ++k)
        for (int t = 0; t < 10; ++t) {
            Gl2Matrix g = rand_matrix(rng), h = rand_matrix(rng);
            if (g.det().is_zero() || h.det().is_zero()) continue;
            CHECK(group_rep(k, g * h) == group_rep(k, g) * group_rep(k, h));
        }
}

TEST_CASE("formal infinitesimal check") {
    Rng rng(4403);
    for (int k = 1; k <= 7; ++k) {
        CHECK(differential_check(k, Gl2Matrix::zero()));
        CHECK(differential_check(k, Gl2Matrix::identity()));
        for (int a = 1; a <= 2; ++a)
            for (int b = 1; b <= 2; ++b) CHECK(differential_check(k, Gl2Matrix::elementary(a, b)));
        for (int t = 0; t < 5; ++t) CHECK(differential_check(k, rand_matrix(rng)));
    }
}

TEST_CASE("lie bracket compatibility") {
    Rng rng(4404);
    for (int k = 1; k <= 7; ++k)
        for (int t = 0; t < 10; ++t) {
            const Gl2Matrix a = rand_matrix(rng), b = rand_matrix(rng);
            CHECK(algebra_rep(k, a.commutator(b)) ==
                  algebra_rep(k, a) * algebra_rep(k, b) - algebra_rep(k, b) * algebra_rep(k, a));
        }
}

TEST_CASE("complex monomial action: lowering example") {
    // phi with phi^1_2 = 1 sends X_{3,1} to (i/2) X_{3,0} + (i/2) X_{3,1} - i X_{3,2}.
    const auto c = complex_monomial_action(3, 1, Gl2Matrix::elementary(1, 2));
    const GaussRational ih = GaussRational(Rational(0), Rational(1, 2));
    CHECK(c.lower == ih);
    CHECK(c.diag == ih);
    CHECK(c.raise == GaussRational(Rational(0), Rational(-1)));
}

TEST_CASE("complex monomial action: identity acts by the degree") {
    for (int k : {3, 5})
        for (int j = 0; j <= k; ++j) {
            const auto c = complex_monomial_action(k, j, Gl2Matrix::identity());
            CHECK(c.lower.is_zero());
            CHECK(c.diag == GaussRational(k));
            CHECK(c.raise.is_zero());
        }
}

TEST_CASE("complex monomial action: rotation eigenvalue") {
    const Gl2Matrix rot = Gl2Matrix::elementary(2, 1) - Gl2Matrix::elementary(1, 2);
    for (int k : {3, 5, 7})
        for (int j = 0; j <= k; ++j) {
            const auto c = complex_monomial_action(k, j, rot);
            CHECK(c.lower.is_zero());
            CHECK(c.raise.is_zero());
            CHECK(c.diag == GaussRational(Rational(0), Rational(2 * j - k)));
        }
}

TEST_CASE("closed form matches the expansion for random matrices") {
    Rng rng(4405);
    for (int k : {3, 5, 7})
        for (int j = 0; j <= k; ++j)
            for (int t = 0; t < 3; ++t) {
                const Gl2Matrix phi = rand_matrix(rng);
                const auto got = complex_monomial_action(k, j, phi);
                const auto want = complex_monomial_action_closed_form(k, j, phi);
                CHECK(got.lower == want.lower);
                CHECK(got.diag == want.diag);
                CHECK(got.raise == want.raise);
            }
}

TEST_CASE("boundary indices drop the out-of-range terms") {
    Rng rng(4406);
    const Gl2Matrix phi = rand_matrix(rng);
    const auto bottom = complex_monomial_action(5, 0, phi);
    CHECK(bottom.lower.is_zero());
    const auto top = complex_monomial_action(5, 5, phi);
    CHECK(top.raise.is_zero());
    CHECK_THROWS_AS(complex_monomial_action(3, 4, phi), std::invalid_argument);
}
