#include "gl2/binary_form.hpp"

#include <ostream>
#include <stdexcept>

namespace gl2 {

Gl2Matrix Gl2Matrix::elementary(int a, int b) {
    if (a < 1 || a > 2 || b < 1 || b > 2) throw std::invalid_argument("Gl2Matrix: elementary index");
    Gl2Matrix m = zero();
    m.at(b - 1, a - 1) = GaussRational(1);
    return m;
}

Gl2Matrix Gl2Matrix::inverse() const {
    const GaussRational d = det();
    if (d.is_zero()) throw std::domain_error("Gl2Matrix: singular");
    return {at(1, 1) / d, -at(0, 1) / d, -at(1, 0) / d, at(0, 0) / d};
}

Gl2Matrix Gl2Matrix::power(long e) const {
    if (e < 0) return inverse().power(-e);
    Gl2Matrix acc = identity(), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

BinaryForm::BinaryForm(int degree) : k_(degree) {
    if (degree < 0) throw std::invalid_argument("BinaryForm: negative degree");
    c_.assign(static_cast<size_t>(degree) + 1, GaussRational(0));
}

BinaryForm::BinaryForm(int degree, std::vector<GaussRational> coeffs)
    : k_(degree), c_(std::move(coeffs)) {
    if (degree < 0) throw std::invalid_argument("BinaryForm: negative degree");
    if (c_.size() != static_cast<size_t>(degree) + 1)
        throw std::invalid_argument("BinaryForm: coefficient count != degree+1");
}

BinaryForm BinaryForm::monomial(int degree, int i, GaussRational c) {
    BinaryForm f(degree);
    if (i < 0 || i > degree) throw std::invalid_argument("BinaryForm: monomial index");
    f.coeff(i) = std::move(c);
    return f;
}

BinaryForm BinaryForm::linear_power(int degree, const GaussRational& a, const GaussRational& b) {
    BinaryForm lin(1, {a, b});
    BinaryForm out(0, {GaussRational(1)});
    for (int s = 0; s < degree; ++s) out = out * lin;
    return out;
}

bool BinaryForm::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

BinaryForm BinaryForm::conj() const {
    BinaryForm out(k_);
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i].conj();
    return out;
}

BinaryForm operator-(const BinaryForm& f) {
    BinaryForm out(f.k_);
    for (size_t i = 0; i < f.c_.size(); ++i) out.c_[i] = -f.c_[i];
    return out;
}

BinaryForm operator+(const BinaryForm& f, const BinaryForm& g) {
    if (f.k_ != g.k_) throw std::invalid_argument("BinaryForm: degree mismatch");
    BinaryForm out(f.k_);
    for (size_t i = 0; i < f.c_.size(); ++i) out.c_[i] = f.c_[i] + g.c_[i];
    return out;
}

BinaryForm operator-(const BinaryForm& f, const BinaryForm& g) {
    if (f.k_ != g.k_) throw std::invalid_argument("BinaryForm: degree mismatch");
    BinaryForm out(f.k_);
    for (size_t i = 0; i < f.c_.size(); ++i) out.c_[i] = f.c_[i] - g.c_[i];
    return out;
}

BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
    BinaryForm out(f.k_ + g.k_);
    for (size_t i = 0; i < f.c_.size(); ++i) {
        if (f.c_[i].is_zero()) continue;
        for (size_t j = 0; j < g.c_.size(); ++j) out.coeff(static_cast<int>(i + j)) += f.c_[i] * g.c_[j];
    }
    return out;
}

BinaryForm operator*(const GaussRational& c, const BinaryForm& f) {
    BinaryForm out(f.k_);
    for (size_t i = 0; i < f.c_.size(); ++i) out.c_[i] = c * f.c_[i];
    return out;
}

std::string BinaryForm::str() const {
    std::string s;
    bool any = false;
    for (int i = 0; i <= k_; ++i) {
        const GaussRational& c = coeff(i);
        if (c.is_zero()) continue;
        std::string mono;
        const int px = k_ - i, py = i;
        if (px > 0) mono += "x" + (px > 1 ? "^" + std::to_string(px) : "");
        if (py > 0) {
            if (!mono.empty()) mono += "*";
            mono += "y" + (py > 1 ? "^" + std::to_string(py) : "");
        }
        bool neg = false;
        std::string cs;
        if (c.is_real()) {
            Rational r = c.re();
            neg = r.sgn() < 0;
            r = r.abs();
            if (!(r.is_one() && !mono.empty())) cs = r.str();
        } else {
            cs = "(" + c.str() + ")";
        }
        if (!any)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (cs.empty())
            s += mono;
        else
            s += cs + (mono.empty() ? "" : "*" + mono);
        any = true;
    }
    return any ? s : "0";
}

std::ostream& operator<<(std::ostream& os, const BinaryForm& f) { return os << f.str(); }

std::pair<BinaryForm, BinaryForm> harmonic_pair(int i) {
    if (i < 1) throw std::invalid_argument("harmonic_pair: degree must be >= 1");
    // (x + i y)^i expanded; even/odd parts are the real/imaginary pieces.
    BinaryForm even(i), odd(i);
    Rational binom(1);
    for (int m = 0; m <= i; ++m) {
        const int r = m % 4;
        const Rational sign((r == 0 || r == 1) ? 1 : -1);
        if (r % 2 == 0)
            even.coeff(m) = GaussRational(sign * binom);
        else
            odd.coeff(m) = GaussRational(sign * binom);
        binom = binom * Rational(i - m) / Rational(m + 1);
    }
    return {even, odd};
}

std::pair<BinaryForm, BinaryForm> weight_pair(int k, int j) {
    if (j < 0 || k - 2 * j < 1) throw std::invalid_argument("weight_pair: index out of range");
    auto [we, wo] = harmonic_pair(k - 2 * j);
    const BinaryForm r2 = BinaryForm(2, {GaussRational(1), GaussRational(0), GaussRational(1)});
    BinaryForm factor(0, {GaussRational(1)});
    for (int s = 0; s < j; ++s) factor = factor * r2;
    return {factor * we, factor * wo};
}

BinaryForm radial_power(int k) {
    if (k < 0 || k % 2 != 0) throw std::invalid_argument("radial_power: even degree required");
    const BinaryForm r2 = BinaryForm(2, {GaussRational(1), GaussRational(0), GaussRational(1)});
    BinaryForm out(0, {GaussRational(1)});
    for (int s = 0; s < k / 2; ++s) out = out * r2;
    return out;
}

BinaryForm complex_monomial(int k, int j) {
    if (j < 0 || j > k) throw std::invalid_argument("complex_monomial: index out of range");
    const BinaryForm zp(1, {GaussRational(1), GaussRational::i()});             // x + i y
    const BinaryForm zm(1, {GaussRational(1), -GaussRational::i()});            // x - i y
    BinaryForm out(0, {GaussRational(1)});
    for (int s = 0; s < j; ++s) out = out * zp;
    for (int s = 0; s < k - j; ++s) out = out * zm;
    return out;
}

BinaryForm act(const BinaryForm& v, const Gl2Matrix& g) {
    // x -> m00 x + m10 y, y -> m01 x + m11 y (row-vector action).
    const int k = v.degree();
    const BinaryForm u(1, {g.at(0, 0), g.at(1, 0)});
    const BinaryForm w(1, {g.at(0, 1), g.at(1, 1)});
    // Powers u^(k-j) w^j, built incrementally.
    std::vector<BinaryForm> upow, wpow;
    upow.reserve(static_cast<size_t>(k) + 1);
    wpow.reserve(static_cast<size_t>(k) + 1);
    upow.emplace_back(0, std::vector<GaussRational>{GaussRational(1)});
    wpow.emplace_back(0, std::vector<GaussRational>{GaussRational(1)});
    for (int s = 1; s <= k; ++s) {
        upow.push_back(upow.back() * u);
        wpow.push_back(wpow.back() * w);
    }
    BinaryForm out(k);
    for (int j = 0; j <= k; ++j) {
        if (v.coeff(j).is_zero()) continue;
        out = out + v.coeff(j) * (upow[static_cast<size_t>(k - j)] * wpow[static_cast<size_t>(j)]);
    }
    return out;
}

std::vector<BinaryForm> alpha_plane_basis(int k, int i, const GaussRational& a,
                                          const GaussRational& b, const GaussRational& c,
                                          const GaussRational& d) {
    if ((a * d - b * c).is_zero()) throw std::domain_error("alpha_plane_basis: frame is degenerate (ad-bc=0)");
    if (i < 1 || i > k + 1) throw std::invalid_argument("alpha_plane_basis: dimension out of range");
    const BinaryForm l1(1, {a, b});
    const BinaryForm l2(1, {c, d});
    std::vector<BinaryForm> out;
    out.reserve(static_cast<size_t>(i));
    for (int s = 0; s < i; ++s) {
        BinaryForm f(0, {GaussRational(1)});
        for (int t = 0; t < k - s; ++t) f = f * l1;
        for (int t = 0; t < s; ++t) f = f * l2;
        out.push_back(std::move(f));
    }
    return out;
}

std::optional<BinaryForm> divide_linear(const BinaryForm& v, const GaussRational& a,
                                        const GaussRational& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("divide_linear: zero divisor");
    const int k = v.degree();
    if (k == 0) return std::nullopt;
    BinaryForm q(k - 1);
    if (!a.is_zero()) {
        // Peel coefficients from the x^k end: v_i = a q_i + b q_{i-1}.
        GaussRational carry(0);
        for (int i = 0; i < k; ++i) {
            q.coeff(i) = (v.coeff(i) - carry) / a;
            carry = b * q.coeff(i);
        }
        if (v.coeff(k) == carry) return q;
        return std::nullopt;
    }
    // a == 0: v must be divisible by b*y.
    if (!v.coeff(0).is_zero()) return std::nullopt;
    for (int i = 1; i <= k; ++i) q.coeff(i - 1) = v.coeff(i) / b;
    return q;
}

std::optional<std::pair<Rational, Rational>> null_cone_root(const BinaryForm& v) {
    if (v.is_zero()) throw std::domain_error("null_cone_root: zero form");
    const int k = v.degree();
    for (const auto& c : v.coeffs())
        if (!c.is_real()) return std::nullopt;
    if (k == 0) return std::nullopt;
    const Rational c0 = v.coeff(0).re();
    if (c0.is_zero()) {
        // a = 0 path: v must be b^k y^k.
        for (int i = 0; i < k; ++i)
            if (!v.coeff(i).is_zero()) return std::nullopt;
        Rational b;
        if (!v.coeff(k).re().nth_root(static_cast<unsigned long>(k), b)) return std::nullopt;
        if (v == BinaryForm::linear_power(k, GaussRational(0), GaussRational(b)))
            return std::make_pair(Rational(0), b);
        return std::nullopt;
    }
    Rational a;
    if (!c0.nth_root(static_cast<unsigned long>(k), a)) return std::nullopt;
    // Candidate b from the x^(k-1) y coefficient: c1 = k a^(k-1) b.
    const Rational b = v.coeff(1).re() / (Rational(k) * a.pow(k - 1));
    if (v == BinaryForm::linear_power(k, GaussRational(a), GaussRational(b)))
        return std::make_pair(a, b);
    return std::nullopt;
}

}  // namespace gl2
