#include "gl2/complex_structure.hpp"

#include <stdexcept>

namespace gl2 {

namespace {

/// Columns: (even_0, odd_0, ..., even_q, odd_q [, radial for even k]) on the
/// monomial frame. All entries are real integers.
Matrix<Rational> weight_basis_matrix(int k) {
    const size_t n = static_cast<size_t>(k) + 1;
    Matrix<Rational> b(n, n);
    size_t col = 0;
    for (int j = 0; 2 * j < k; ++j) {
        const auto [e, o] = weight_pair(k, j);
        for (size_t r = 0; r < n; ++r) {
            b.at(r, col) = e.coeff(static_cast<int>(r)).re();
            b.at(r, col + 1) = o.coeff(static_cast<int>(r)).re();
        }
        col += 2;
    }
    if (k % 2 == 0) {
        const BinaryForm rad = radial_power(k);
        for (size_t r = 0; r < n; ++r) b.at(r, col) = rad.coeff(static_cast<int>(r)).re();
    }
    return b;
}

}  // namespace

ComplexStructureMatrix jk_matrix(int k) {
    if (k < 1) throw std::invalid_argument("jk_matrix: degree must be >= 1");
    const size_t n = static_cast<size_t>(k) + 1;
    const Matrix<Rational> b = weight_basis_matrix(k);
    Matrix<Rational> block(n, n);
    const int pairs = (k + 1) / 2;
    for (int j = 0; j < pairs; ++j) {
        block.at(2 * static_cast<size_t>(j), 2 * static_cast<size_t>(j) + 1) = Rational(-1);
        block.at(2 * static_cast<size_t>(j) + 1, 2 * static_cast<size_t>(j)) = Rational(1);
    }
    ComplexStructureMatrix out;
    out.k = k;
    out.weight_zero_annihilated = (k % 2 == 0);
    out.m = b * block * b.inverse();
    return out;
}

XiBasis xi_basis(int k) {
    if (k < 1) throw std::invalid_argument("xi_basis: degree must be >= 1");
    const size_t n = static_cast<size_t>(k) + 1;
    const Matrix<Rational> binv = weight_basis_matrix(k).inverse();
    XiBasis out;
    out.k = k;
    const int pairs = (k + 1) / 2;
    for (int j = 0; j < pairs; ++j) {
        std::vector<GaussRational> row(n);
        for (size_t i = 0; i < n; ++i)
            row[i] = GaussRational(binv.at(2 * static_cast<size_t>(j), i),
                                   binv.at(2 * static_cast<size_t>(j) + 1, i));
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::string xi_row_pretty(const std::vector<GaussRational>& row) {
    Rational den(1);
    for (const auto& c : row) {
        den = lcm(den, Rational(c.re().den()));
        den = lcm(den, Rational(c.im().den()));
    }
    auto ints = [&](bool imag) {
        std::string s;
        for (size_t i = 0; i < row.size(); ++i) {
            const Rational v = (imag ? row[i].im() : row[i].re()) * den;
            if (v.is_zero()) continue;
            const bool neg = v.sgn() < 0;
            const Rational av = v.abs();
            if (s.empty())
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            if (!av.is_one()) s += av.str() + "*";
            s += "w" + std::to_string(i);
        }
        return s;
    };
    const std::string re = ints(false);
    const std::string im = ints(true);
    std::string inner = re;
    if (!im.empty()) {
        if (!inner.empty()) inner += " + ";
        inner += "i*(" + im + ")";
    }
    if (inner.empty()) inner = "0";
    if (den.is_one()) return inner;
    return "(1/" + den.str() + ")*(" + inner + ")";
}

ComplexBasisChange complex_basis_change(int k) {
    if (k % 2 == 0)
        throw std::domain_error("complex_basis_change: even degree has no square complex frame");
    const XiBasis xb = xi_basis(k);
    const size_t n = static_cast<size_t>(k) + 1;
    const size_t q = static_cast<size_t>(xb.pair_count());
    ComplexBasisChange out;
    out.k = k;
    out.frame = Matrix<GaussRational>(n, n);
    for (size_t j = 0; j < q; ++j)
        for (size_t i = 0; i < n; ++i) {
            out.frame.at(j, i) = xb.rows[j][i];
            out.frame.at(q + j, i) = xb.rows[j][i].conj();
        }
    out.inverse = out.frame.inverse();
    return out;
}

}  // namespace gl2
