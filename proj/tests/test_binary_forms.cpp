#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gl2/binary_form.hpp"
#include "gl2/rep.hpp"

using namespace gl2;

namespace {

using Rng = std::mt19937_64;

Rational rand_rational(Rng& rng, int lo = -9, int hi = 9, int max_den = 9) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

Gl2Matrix rand_co2(Rng& rng) {
    while (true) {
        const Rational u = rand_rational(rng), v = rand_rational(rng);
        if (u.is_zero() && v.is_zero()) continue;
        return Gl2Matrix::co2(GaussRational(u), GaussRational(v));
    }
}

BinaryForm from_ints(int degree, std::initializer_list<int> cs) {
    std::vector<GaussRational> v;
    for (int c : cs) v.emplace_back(c);
    return BinaryForm(degree, std::move(v));
}

}  // namespace

TEST_CASE("harmonic pairs match the printed low degrees") {
    {
        const auto [e, o] = harmonic_pair(1);
        CHECK(e == from_ints(1, {1, 0}));  // x
        CHECK(o == from_ints(1, {0, 1}));  // y
    }
    {
        const auto [e, o] = harmonic_pair(2);
        CHECK(e == from_ints(2, {1, 0, -1}));  // x^2 - y^2
        CHECK(o == from_ints(2, {0, 2, 0}));   // 2xy
    }
    {
        const auto [e, o] = harmonic_pair(3);
        CHECK(e == from_ints(3, {1, 0, -3, 0}));  // x^3 - 3xy^2
        CHECK(o == from_ints(3, {0, 3, 0, -1}));  // 3x^2y - y^3
    }
    CHECK_THROWS_AS(harmonic_pair(0), std::invalid_argument);
}

TEST_CASE("weight pairs match the printed degree-5 family") {
    {
        const auto [e, o] = weight_pair(3, 1);
        CHECK(e == from_ints(3, {1, 0, 1, 0}));  // x^3 + xy^2
        CHECK(o == from_ints(3, {0, 1, 0, 1}));  // x^2y + y^3
    }
    {
        const auto [e, o] = weight_pair(5, 2);
        CHECK(e == from_ints(5, {1, 0, 2, 0, 1, 0}));
        CHECK(o == from_ints(5, {0, 1, 0, 2, 0, 1}));
    }
    {
        const auto [e, o] = weight_pair(5, 1);
        CHECK(e == from_ints(5, {1, 0, -2, 0, -3, 0}));
        CHECK(o == from_ints(5, {0, 3, 0, 2, 0, -1}));
    }
    CHECK(weight_pair(4, 0) == harmonic_pair(4));
    CHECK_THROWS_AS(weight_pair(4, 2), std::invalid_argument);  // weight-zero line is separate
    CHECK(radial_power(4) == from_ints(4, {1, 0, 2, 0, 1}));
}

TEST_CASE("complex monomials") {
    const BinaryForm x31 = complex_monomial(3, 1);
    BinaryForm want(3);
    want.coeff(0) = GaussRational(1);
    want.coeff(1) = -GaussRational::i();
    want.coeff(2) = GaussRational(1);
    want.coeff(3) = -GaussRational::i();
    CHECK(x31 == want);  // x^3 - i x^2 y + x y^2 - i y^3

    // j = 0 is the pure antiholomorphic power (substitute x -> x - i y).
    CHECK(complex_monomial(4, 0) ==
          act(BinaryForm::monomial(4, 0), Gl2Matrix(GaussRational(1), GaussRational(0),
                                                    -GaussRational::i(), GaussRational(1))));

    for (int k = 1; k <= 9; ++k)
        for (int j = 0; j <= k; ++j)
            CHECK(complex_monomial(k, j).conj() == complex_monomial(k, k - j));
}

TEST_CASE("two routes to the holomorphic eigenvectors agree") {
    // (x^2+y^2)^j (x-iy)^(k-2j) built from the weight pairs equals the
    // complex monomial for every admissible index.
    for (int k = 1; k <= 9; ++k)
        for (int j = 0; 2 * j < k; ++j) {
            const auto [e, o] = weight_pair(k, j);
            const BinaryForm lhs = e - GaussRational::i() * o;
            CHECK(lhs == complex_monomial(k, j));
        }
}

TEST_CASE("substitution action") {
    const BinaryForm x2 = BinaryForm::monomial(2, 0);
    CHECK(act(x2, Gl2Matrix::diagonal(GaussRational(2), GaussRational(1))) ==
          from_ints(2, {4, 0, 0}));

    const auto [w2e, w2o] = harmonic_pair(2);
    const Gl2Matrix g(GaussRational(1), GaussRational(-1), GaussRational(1), GaussRational(1));
    CHECK(act(w2e, g) == from_ints(2, {0, 4, 0}));  // 4xy

    Rng rng(3201);
    for (int t = 0; t < 10; ++t) {
        std::vector<GaussRational> cs;
        for (int i = 0; i <= 4; ++i) cs.emplace_back(rand_rational(rng));
        const BinaryForm v(4, cs);
        CHECK(act(v, Gl2Matrix::identity()) == v);
    }
}

TEST_CASE("rotation identity and composition order") {
    Rng rng(3202);
    for (int t = 0; t < 10; ++t) {
        const Gl2Matrix g = rand_co2(rng);
        for (int i = 1; i <= 6; ++i) {
            const auto [we, wo] = harmonic_pair(i);
            const Gl2Matrix gi = g.power(i);
            CHECK(act(we, g) == gi.at(0, 0) * we + gi.at(1, 0) * wo);
            CHECK(act(wo, g) == -gi.at(1, 0) * we + gi.at(0, 0) * wo);
        }
    }
    for (int t = 0; t < 10; ++t) {
        Gl2Matrix g(GaussRational(rand_rational(rng)), GaussRational(rand_rational(rng)),
                    GaussRational(rand_rational(rng)), GaussRational(rand_rational(rng)));
        Gl2Matrix h(GaussRational(rand_rational(rng)), GaussRational(rand_rational(rng)),
                    GaussRational(rand_rational(rng)), GaussRational(rand_rational(rng)));
        std::vector<GaussRational> cs;
        for (int i = 0; i <= 3; ++i) cs.emplace_back(rand_rational(rng));
        const BinaryForm v(3, cs);
        CHECK(act(act(v, g), h) == act(v, h * g));
    }
}

TEST_CASE("conformal action preserves each weight component") {
    Rng rng(3203);
    for (int k = 1; k <= 7; ++k)
        for (int j = 0; 2 * j < k; ++j) {
            const auto [e, o] = weight_pair(k, j);
            for (int t = 0; t < 5; ++t) {
                const Gl2Matrix g = rand_co2(rng);
                // Exact rank check: images lie in the 2-dimensional span.
                Matrix<GaussRational> m(static_cast<size_t>(k) + 1, 4);
                const BinaryForm ie = act(e, g), io = act(o, g);
                for (int r = 0; r <= k; ++r) {
                    m.at(static_cast<size_t>(r), 0) = e.coeff(r);
                    m.at(static_cast<size_t>(r), 1) = o.coeff(r);
                    m.at(static_cast<size_t>(r), 2) = ie.coeff(r);
                    m.at(static_cast<size_t>(r), 3) = io.coeff(r);
                }
                CHECK(m.rank() == 2);
            }
        }
    // The radial quadratic is preserved up to the conformal factor.
    for (int t = 0; t < 10; ++t) {
        const Gl2Matrix g = rand_co2(rng);
        const GaussRational factor = g.at(0, 0) * g.at(0, 0) + g.at(1, 0) * g.at(1, 0);
        CHECK(act(radial_power(2), g) == factor * radial_power(2));
    }
}

TEST_CASE("osculating plane bases") {
    const auto basis = alpha_plane_basis(3, 2, GaussRational(1), GaussRational(0), GaussRational(0),
                                         GaussRational(1));
    REQUIRE(basis.size() == 2);
    CHECK(basis[0] == from_ints(3, {1, 0, 0, 0}));  // x^3
    CHECK(basis[1] == from_ints(3, {0, 1, 0, 0}));  // x^2 y

    // Full flag spans everything.
    const auto full = alpha_plane_basis(4, 5, GaussRational(2), GaussRational(1), GaussRational(1),
                                        GaussRational(1));
    Matrix<GaussRational> m(5, 5);
    for (size_t c = 0; c < 5; ++c)
        for (int r = 0; r <= 4; ++r) m.at(static_cast<size_t>(r), c) = full[c].coeff(r);
    CHECK(m.rank() == 5);

    CHECK_THROWS_AS(alpha_plane_basis(3, 2, GaussRational(1), GaussRational(0), GaussRational(2),
                                      GaussRational(0)),
                    std::domain_error);  // ad - bc = 0
    CHECK_THROWS_AS(alpha_plane_basis(3, 5, GaussRational(1), GaussRational(0), GaussRational(0),
                                      GaussRational(1)),
                    std::invalid_argument);

    // Every element has a root of multiplicity >= k-i+1 along the plane's
    // null direction: repeated exact division by (a x + b y).
    const GaussRational a(2), b(3), c(1), d(2);
    const int k = 5, i = 3;
    for (const auto& f : alpha_plane_basis(k, i, a, b, c, d)) {
        BinaryForm cur = f;
        for (int s = 0; s < k - i + 1; ++s) {
            const auto q = divide_linear(cur, a, b);
            REQUIRE(q.has_value());
            cur = *q;
        }
    }
}

TEST_CASE("null cone membership over the rationals") {
    const BinaryForm v = BinaryForm::linear_power(3, GaussRational(1), GaussRational(2));
    const auto root = null_cone_root(v);
    REQUIRE(root.has_value());
    CHECK(root->first == Rational(1));
    CHECK(root->second == Rational(2));

    CHECK(!null_cone_root(from_ints(3, {1, 0, 0, 1})).has_value());  // x^3 + y^3
    const auto y4 = null_cone_root(from_ints(4, {0, 0, 0, 0, 1}));
    REQUIRE(y4.has_value());
    CHECK(y4->first == Rational(0));
    CHECK(y4->second == Rational(1));

    // On the cone over the reals, but not with a rational pair.
    CHECK(!null_cone_root(from_ints(3, {2, 0, 0, 0})).has_value());
    CHECK_THROWS_AS(null_cone_root(BinaryForm(3)), std::domain_error);
}
