#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gl2/exterior.hpp"

using namespace gl2;

namespace {

using Rng = std::mt19937_64;

Rational rand_rational(Rng& rng, int lo = -4, int hi = 4, int max_den = 3) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

RatFunc rand_poly_coeff(Rng& rng, const Patch& patch) {
    std::uniform_int_distribution<int> var(0, patch.dim() - 1);
    std::uniform_int_distribution<int> deg(0, 3);
    MultiPoly p(rand_rational(rng));
    for (int t = 0; t < 2; ++t) {
        MultiPoly mono(rand_rational(rng));
        const int d = deg(rng);
        for (int e = 0; e < d; ++e) mono *= MultiPoly::variable(patch.var(var(rng)));
        p += mono;
    }
    return RatFunc(p);
}

DForm rand_form(Rng& rng, const Patch& patch, int degree) {
    DForm out(patch, degree);
    std::uniform_int_distribution<int> var(0, patch.dim() - 1);
    for (int t = 0; t < 2; ++t) {
        DForm::Mask m = 0;
        while (std::popcount(m) < degree) m |= DForm::Mask{1} << var(rng);
        out.add_term(m, rand_poly_coeff(rng, patch));
    }
    return out;
}

}  // namespace

TEST_CASE("patch construction") {
    const Patch p(4);
    CHECK(p.dim() == 4);
    CHECK(p.var(2) == "p2");
    CHECK(p.var_index("p3") == 3);
    CHECK_THROWS_AS(p.var_index("q0"), std::invalid_argument);
    CHECK_THROWS_AS(Patch(std::vector<std::string>{"a", "a"}), std::invalid_argument);
}

TEST_CASE("wedge basics") {
    const Patch p(3);
    const DForm dp0 = DForm::dp(p, 0), dp1 = DForm::dp(p, 1), dp2 = DForm::dp(p, 2);

    const DForm w = wedge(dp0, dp1);
    CHECK(w.degree() == 2);
    CHECK(w.coeff(0b011) == RatFunc(1));
    CHECK(wedge(dp0, dp0).is_zero());

    const DForm f = RatFunc::variable("p1") * dp0;
    const DForm fw = wedge(f, dp2);
    CHECK(fw.coeff(0b101) == RatFunc::variable("p1"));

    // Graded commutativity on random forms.
    Rng rng(8801);
    for (int t = 0; t < 30; ++t) {
        std::uniform_int_distribution<int> deg(0, 2);
        const int da = deg(rng), db = deg(rng);
        const DForm a = rand_form(rng, p, da), b = rand_form(rng, p, db);
        const DForm ab = wedge(a, b), ba = wedge(b, a);
        CHECK(ab == ((da * db) % 2 == 0 ? ba : -ba));
    }

    const Patch q(2);
    CHECK_THROWS_AS(wedge(DForm::dp(q, 0), dp1), std::invalid_argument);
}

TEST_CASE("exterior derivative basics") {
    const Patch p(3);
    const DForm d1 = ext_d(RatFunc::variable("p0") * DForm::dp(p, 1));
    CHECK(d1 == wedge(DForm::dp(p, 0), DForm::dp(p, 1)));

    const RatFunc p0 = RatFunc::variable("p0"), p1 = RatFunc::variable("p1");
    const DForm d2 = ext_d((p0 * p1) * DForm::dp(p, 2));
    const DForm want = p1 * wedge(DForm::dp(p, 0), DForm::dp(p, 2)) +
                       p0 * wedge(DForm::dp(p, 1), DForm::dp(p, 2));
    CHECK(d2 == want);

    Rng rng(8802);
    for (int t = 0; t < 30; ++t) {
        const DForm f = DForm::function(p, rand_poly_coeff(rng, p));
        CHECK(ext_d(ext_d(f)).is_zero());
    }
}

TEST_CASE("evaluation") {
    const Patch p(2);
    const DForm f = RatFunc::variable("p0") * DForm::dp(p, 1);
    const auto at = evaluate_at(f, {Rational(2), Rational(5)});
    REQUIRE(at.size() == 1);
    CHECK(at.at(0b10) == GaussRational(2));

    const DForm g = (RatFunc(1) / RatFunc::variable("p0")) * DForm::dp(p, 1);
    CHECK_THROWS_AS(evaluate_at(g, {Rational(0), Rational(1)}), std::domain_error);

    const DForm c = DForm::function(p, RatFunc(Rational(7, 3)));
    CHECK(evaluate_at(c, {Rational(9), Rational(-2)}).at(0) == GaussRational(Rational(7, 3)));
}

TEST_CASE("structure functions of simple coframes") {
    const Patch p(4);
    std::vector<DForm> flat;
    for (int i = 0; i < 4; ++i) flat.push_back(DForm::dp(p, i));
    CHECK(structure_functions(Coframe(p, flat)).is_zero());

    // eta^0 = dp0 + p1 dp2: the only wedge component is eta^1 ^ eta^2.
    std::vector<DForm> shear = flat;
    shear[0] += RatFunc::variable("p1") * DForm::dp(p, 2);
    const auto c = structure_functions(Coframe(p, shear));
    CHECK(c.get(0, 1, 2) == RatFunc(1));
    int count = 0;
    for (const auto& [key, v] : c.components()) {
        (void)key;
        count += !v.is_zero();
    }
    CHECK(count == 1);
}

TEST_CASE("structure function round trip on random unipotent coframes") {
    Rng rng(8803);
    for (int trial = 0; trial < 5; ++trial) {
        const Patch p(4);
        std::vector<DForm> forms;
        for (int i = 0; i < 4; ++i) forms.push_back(DForm::dp(p, i));
        std::uniform_int_distribution<int> var(0, 3);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                forms[static_cast<size_t>(i)] +=
                    RatFunc(MultiPoly::variable(p.var(var(rng))) * MultiPoly(rand_rational(rng))) *
                    DForm::dp(p, j);
        const Coframe cf(p, forms);
        const auto c = structure_functions(cf);
        for (int i = 0; i < 4; ++i) CHECK(structure_residual(cf, c, i).is_zero());
    }
}

TEST_CASE("singular coframes are rejected") {
    const Patch p(2);
    std::vector<DForm> dep{DForm::dp(p, 0), DForm::dp(p, 0)};
    CHECK_THROWS_AS(structure_functions(Coframe(p, dep)), std::domain_error);
    // Singular at a point but invertible as rational functions is fine.
    std::vector<DForm> pointwise{RatFunc::variable("p0") * DForm::dp(p, 0), DForm::dp(p, 1)};
    CHECK_NOTHROW(structure_functions(Coframe(p, pointwise)));
}
