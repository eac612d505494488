#include "gl2/rep.hpp"

#include <stdexcept>

namespace gl2 {

namespace {

/// Dual number a + b*eps with eps^2 = 0; just enough ring structure for the
/// formal differentiation of the group action.
struct Dual {
    GaussRational a, b;
    Dual(int n = 0) : a(n), b(0) {}
    Dual(GaussRational value, GaussRational deriv) : a(std::move(value)), b(std::move(deriv)) {}
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    friend Dual operator+(const Dual& x, const Dual& y) { return {x.a + y.a, x.b + y.b}; }
    friend Dual operator-(const Dual& x, const Dual& y) { return {x.a - y.a, x.b - y.b}; }
    friend Dual operator*(const Dual& x, const Dual& y) { return {x.a * y.a, x.a * y.b + x.b * y.a}; }
    Dual& operator+=(const Dual& y) { return *this = *this + y; }
    friend bool operator==(const Dual& x, const Dual& y) { return x.a == y.a && x.b == y.b; }
};

/// Columns of the substitution action over an arbitrary scalar ring:
/// column j holds the coefficients of (m00 x + m10 y)^(k-j) (m01 x + m11 y)^j.
template <class S>
Matrix<S> substitution_matrix(int k, const std::array<std::array<S, 2>, 2>& m) {
    const size_t n = static_cast<size_t>(k) + 1;
    // poly[d] = coefficient vector (length d+1) of u^p or w^q, built iteratively.
    auto powers = [k](const S& cx, const S& cy) {
        std::vector<std::vector<S>> p;
        p.push_back({S(1)});
        for (int d = 1; d <= k; ++d) {
            const auto& prev = p.back();
            std::vector<S> cur(static_cast<size_t>(d) + 1, S(0));
            for (size_t t = 0; t < prev.size(); ++t) {
                cur[t] += prev[t] * cx;
                cur[t + 1] += prev[t] * cy;
            }
            p.push_back(std::move(cur));
        }
        return p;
    };
    const auto up = powers(m[0][0], m[1][0]);
    const auto wp = powers(m[0][1], m[1][1]);
    Matrix<S> out(n, n);
    for (int j = 0; j <= k; ++j) {
        const auto& u = up[static_cast<size_t>(k - j)];
        const auto& w = wp[static_cast<size_t>(j)];
        for (size_t s = 0; s < u.size(); ++s)
            for (size_t t = 0; t < w.size(); ++t) out.at(s + t, static_cast<size_t>(j)) += u[s] * w[t];
    }
    return out;
}

}  // namespace

Matrix<GaussRational> algebra_rep(int k, const Gl2Matrix& phi) {
    std::array<std::array<GaussRational, 2>, 2> m{
        {{phi.at(0, 0), phi.at(0, 1)}, {phi.at(1, 0), phi.at(1, 1)}}};
    return algebra_rep<GaussRational>(k, m);
}

Matrix<GaussRational> group_rep(int k, const Gl2Matrix& g) {
    if (g.det().is_zero()) throw std::domain_error("group_rep: singular matrix");
    std::array<std::array<GaussRational, 2>, 2> m{
        {{g.at(0, 0), g.at(0, 1)}, {g.at(1, 0), g.at(1, 1)}}};
    return substitution_matrix<GaussRational>(k, m);
}

bool differential_check(int k, const Gl2Matrix& phi) {
    std::array<std::array<Dual, 2>, 2> m;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            m[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                Dual(r == c ? GaussRational(1) : GaussRational(0), phi.at(r, c));
    const Matrix<Dual> full = substitution_matrix<Dual>(k, m);
    const Matrix<GaussRational> expected = algebra_rep(k, phi);
    const size_t n = static_cast<size_t>(k) + 1;
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) {
            const GaussRational id(r == c ? 1 : 0);
            if (!(full.at(r, c).a == id) || !(full.at(r, c).b == expected.at(r, c))) return false;
        }
    return true;
}

GaussRational zeta_of(const Gl2Matrix& phi) {
    return GaussRational(phi.phi(1, 2) + phi.phi(2, 1)) +
           GaussRational::i() * (phi.phi(2, 2) - phi.phi(1, 1));
}

GaussRational alpha_of(const Gl2Matrix& phi) {
    return GaussRational(phi.phi(1, 1) + phi.phi(2, 2)) +
           GaussRational::i() * (phi.phi(1, 2) - phi.phi(2, 1));
}

ComplexMonomialAction complex_monomial_action(int k, int j, const Gl2Matrix& phi) {
    if (j < 0 || j > k) throw std::invalid_argument("complex_monomial_action: index out of range");
    const size_t n = static_cast<size_t>(k) + 1;
    // Solve X c = image in the full complex-monomial basis, then check the
    // support is contained in {j-1, j, j+1}.
    Matrix<GaussRational> basis(n, n);
    for (int l = 0; l <= k; ++l) {
        const BinaryForm xl = complex_monomial(k, l);
        for (size_t r = 0; r < n; ++r) basis.at(r, static_cast<size_t>(l)) = xl.coeff(static_cast<int>(r));
    }
    const BinaryForm xj = complex_monomial(k, j);
    std::vector<GaussRational> img(n, GaussRational(0));
    {
        const Matrix<GaussRational> rep = algebra_rep(k, phi);
        std::vector<GaussRational> v(n);
        for (size_t r = 0; r < n; ++r) v[r] = xj.coeff(static_cast<int>(r));
        img = rep.apply(v);
    }
    const std::vector<GaussRational> c = basis.solve(img);
    ComplexMonomialAction out;
    for (int l = 0; l <= k; ++l) {
        const GaussRational& cl = c[static_cast<size_t>(l)];
        if (l == j - 1)
            out.lower = cl;
        else if (l == j)
            out.diag = cl;
        else if (l == j + 1)
            out.raise = cl;
        else if (!cl.is_zero())
            throw std::logic_error("complex_monomial_action: image not supported on neighbours");
    }
    return out;
}

ComplexMonomialAction complex_monomial_action_closed_form(int k, int j, const Gl2Matrix& phi) {
    if (j < 0 || j > k) throw std::invalid_argument("complex_monomial_action: index out of range");
    const GaussRational z = zeta_of(phi);
    const GaussRational a = alpha_of(phi);
    const GaussRational abar = GaussRational(phi.phi(1, 1) + phi.phi(2, 2)) -
                               GaussRational::i() * (phi.phi(1, 2) - phi.phi(2, 1));
    const GaussRational zbar = GaussRational(phi.phi(1, 2) + phi.phi(2, 1)) -
                               GaussRational::i() * (phi.phi(2, 2) - phi.phi(1, 1));
    const GaussRational half(Rational(1, 2));
    const GaussRational ihalf = GaussRational::i() * half;
    ComplexMonomialAction out;
    out.lower = ihalf * GaussRational(Rational(j)) * z;
    out.diag = half * (GaussRational(Rational(j)) * abar + GaussRational(Rational(k - j)) * a);
    out.raise = -(ihalf * GaussRational(Rational(k - j)) * zbar);
    return out;
}

}  // namespace gl2
