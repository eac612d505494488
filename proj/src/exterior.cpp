#include "gl2/exterior.hpp"

#include <bit>
#include <ostream>
#include <set>
#include <stdexcept>

namespace gl2 {

Patch::Patch(int n) {
    if (n < 1 || n > 30) throw std::invalid_argument("Patch: dimension out of range");
    vars_.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) vars_.push_back("p" + std::to_string(i));
}

Patch::Patch(std::vector<std::string> names) : vars_(std::move(names)) {
    if (vars_.empty() || vars_.size() > 30) throw std::invalid_argument("Patch: dimension out of range");
    std::set<std::string> seen(vars_.begin(), vars_.end());
    if (seen.size() != vars_.size()) throw std::invalid_argument("Patch: duplicate variable names");
}

int Patch::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("Patch: unknown variable '" + name + "'");
}

int DForm::mask_degree(Mask m) { return std::popcount(m); }

DForm::DForm(Patch patch, int degree) : patch_(std::move(patch)), degree_(degree) {
    if (degree < 0 || degree > patch_.dim())
        throw std::invalid_argument("DForm: degree out of range");
}

DForm DForm::function(Patch patch, RatFunc f) {
    DForm out(std::move(patch), 0);
    if (!f.is_zero()) out.c_.emplace(Mask{0}, std::move(f));
    return out;
}

DForm DForm::dp(Patch patch, int i) {
    DForm out(std::move(patch), 1);
    if (i < 0 || i >= out.patch_.dim()) throw std::invalid_argument("DForm: dp index out of range");
    out.c_.emplace(Mask{1} << i, RatFunc(1));
    return out;
}

RatFunc DForm::coeff(Mask m) const {
    const auto it = c_.find(m);
    return it == c_.end() ? RatFunc() : it->second;
}

void DForm::add_term(Mask m, const RatFunc& v) {
    if (mask_degree(m) != degree_) throw std::invalid_argument("DForm: term degree mismatch");
    if (v.is_zero()) return;
    auto [it, inserted] = c_.try_emplace(m, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) c_.erase(it);
    }
}

DForm operator-(const DForm& a) {
    DForm out(a.patch_, a.degree_);
    for (const auto& [m, v] : a.c_) out.c_.emplace(m, -v);
    return out;
}

DForm operator+(const DForm& a, const DForm& b) {
    if (a.patch_ != b.patch_) throw std::invalid_argument("DForm: patch mismatch");
    if (a.degree_ != b.degree_) throw std::invalid_argument("DForm: degree mismatch");
    DForm out = a;
    for (const auto& [m, v] : b.c_) out.add_term(m, v);
    return out;
}

DForm operator-(const DForm& a, const DForm& b) { return a + (-b); }

DForm operator*(const RatFunc& f, const DForm& a) {
    DForm out(a.patch_, a.degree_);
    if (f.is_zero()) return out;
    for (const auto& [m, v] : a.c_) out.add_term(m, f * v);
    return out;
}

bool operator==(const DForm& a, const DForm& b) {
    if (a.patch_ != b.patch_ || a.degree_ != b.degree_) return false;
    // RatFunc representations are not unique; compare by value.
    for (const auto& [m, v] : a.c_)
        if (!(v == b.coeff(m))) return false;
    for (const auto& [m, v] : b.c_)
        if (!(v == a.coeff(m))) return false;
    return true;
}

std::string DForm::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (const auto& [m, v] : c_) {
        if (!s.empty()) s += " + ";
        s += "(" + v.str() + ")";
        for (int i = 0; i < patch_.dim(); ++i)
            if (m & (Mask{1} << i)) s += "^d" + patch_.var(i);
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const DForm& a) { return os << a.str(); }

DForm wedge(const DForm& a, const DForm& b) {
    if (a.patch() != b.patch()) throw std::invalid_argument("wedge: patch mismatch");
    const int deg = a.degree() + b.degree();
    // Above top degree the product vanishes identically; represent it as
    // the zero top-degree form.
    if (deg > a.patch().dim()) return DForm(a.patch(), a.patch().dim());
    DForm out(a.patch(), deg);
    for (const auto& [ma, va] : a.components())
        for (const auto& [mb, vb] : b.components()) {
            if (ma & mb) continue;
            // Sign: each b-index moves past the a-indices above it.
            int inv = 0;
            for (int j = 0; j < 32; ++j) {
                if (!(mb & (DForm::Mask{1} << j))) continue;
                inv += std::popcount(ma >> (j + 1));
            }
            const RatFunc prod = va * vb;
            const DForm::Mask m = ma | mb;
            if (inv % 2 == 0)
                out.add_term(m, prod);
            else
                out.add_term(m, -prod);
        }
    return out;
}

DForm ext_d(const DForm& a) {
    if (a.degree() >= a.patch().dim()) return DForm(a.patch(), a.patch().dim());
    DForm out(a.patch(), a.degree() + 1);
    for (const auto& [m, v] : a.components()) {
        for (int i = 0; i < a.patch().dim(); ++i) {
            const DForm::Mask bit = DForm::Mask{1} << i;
            if (m & bit) continue;
            const RatFunc dv = v.partial(a.patch().var(i));
            if (dv.is_zero()) continue;
            const int below = std::popcount(m & (bit - 1));
            out.add_term(m | bit, below % 2 == 0 ? dv : -dv);
        }
    }
    return out;
}

std::map<DForm::Mask, GaussRational> evaluate_at(const DForm& a, const PatchPoint& point) {
    if (static_cast<int>(point.size()) != a.patch().dim())
        throw std::invalid_argument("evaluate_at: point dimension mismatch");
    std::map<std::string, GaussRational, VarLess> vals;
    for (int i = 0; i < a.patch().dim(); ++i)
        vals.emplace(a.patch().var(i), GaussRational(point[static_cast<size_t>(i)]));
    std::map<DForm::Mask, GaussRational> out;
    for (const auto& [m, v] : a.components()) {
        const GaussRational value = v.evaluate(vals);
        if (!value.is_zero()) out.emplace(m, value);
    }
    return out;
}

Coframe::Coframe(Patch patch, std::vector<DForm> forms)
    : patch_(std::move(patch)), forms_(std::move(forms)) {
    for (const auto& f : forms_) {
        if (f.patch() != patch_) throw std::invalid_argument("Coframe: patch mismatch");
        if (f.degree() != 1) throw std::invalid_argument("Coframe: entries must be 1-forms");
    }
}

Matrix<RatFunc> Coframe::coefficient_matrix() const {
    Matrix<RatFunc> a(forms_.size(), static_cast<size_t>(patch_.dim()));
    for (size_t i = 0; i < forms_.size(); ++i)
        for (int j = 0; j < patch_.dim(); ++j)
            a.at(i, static_cast<size_t>(j)) = forms_[i].coeff(DForm::Mask{1} << j);
    return a;
}

Matrix<RatFunc> Coframe::inverse_coefficient_matrix() const {
    if (size() != patch_.dim())
        throw std::invalid_argument("Coframe: not square, cannot invert");
    try {
        return coefficient_matrix().inverse();
    } catch (const std::domain_error&) {
        throw std::domain_error("Coframe: identically singular coefficient matrix");
    }
}

Matrix<RatFunc> two_form_in_coframe(const DForm& form, const Matrix<RatFunc>& ainv) {
    if (form.degree() != 2) throw std::invalid_argument("two_form_in_coframe: need a 2-form");
    const size_t n = ainv.rows();
    Matrix<RatFunc> t(n, n);
    for (const auto& [m, v] : form.components()) {
        // Decode the two set bits a < b.
        int a = std::countr_zero(m);
        int b = 31 - std::countl_zero(m);
        // dp_a ^ dp_b = sum_{j<l} (Ainv(a,j) Ainv(b,l) - Ainv(a,l) Ainv(b,j)) eta^j ^ eta^l
        for (size_t j = 0; j < n; ++j)
            for (size_t l = j + 1; l < n; ++l) {
                const RatFunc w = ainv.at(static_cast<size_t>(a), j) * ainv.at(static_cast<size_t>(b), l) -
                                  ainv.at(static_cast<size_t>(a), l) * ainv.at(static_cast<size_t>(b), j);
                if (w.is_zero()) continue;
                const RatFunc add = v * w;
                t.at(j, l) += add;
                t.at(l, j) -= add;
            }
    }
    return t;
}

TorsionTensor<RatFunc> structure_functions(const Coframe& cf) {
    const int n = cf.size();
    if (n != cf.patch().dim())
        throw std::invalid_argument("structure_functions: coframe size must equal patch dimension");
    const Matrix<RatFunc> ainv = cf.inverse_coefficient_matrix();
    TorsionTensor<RatFunc> c(n - 1);
    for (int i = 0; i < n; ++i) {
        const Matrix<RatFunc> t = two_form_in_coframe(ext_d(cf.form(i)), ainv);
        for (int j = 0; j < n; ++j)
            for (int l = j + 1; l < n; ++l)
                if (!t.at(static_cast<size_t>(j), static_cast<size_t>(l)).is_zero())
                    c.add(i, j, l, t.at(static_cast<size_t>(j), static_cast<size_t>(l)));
    }
    return c;
}

DForm structure_residual(const Coframe& cf, const TorsionTensor<RatFunc>& c, int i) {
    DForm res = ext_d(cf.form(i));
    for (int j = 0; j < cf.size(); ++j)
        for (int l = j + 1; l < cf.size(); ++l) {
            const RatFunc v = c.get(i, j, l);
            if (v.is_zero()) continue;
            res -= v * wedge(cf.form(j), cf.form(l));
        }
    return res;
}

}  // namespace gl2
