#include "gl2/multipoly.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace gl2 {

bool MultiPoly::TermLess::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = 0, db = 0;
    for (unsigned e : a) da += e;
    for (unsigned e : b) db += e;
    if (da != db) return da < db;
    // Exponent vectors of equal variable lists have equal length here;
    // lexicographic comparison is enough for a total order.
    return a < b;
}

MultiPoly::MultiPoly(const GaussRational& c) {
    if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

MultiPoly MultiPoly::variable(const std::string& name) {
    if (name.empty()) throw std::invalid_argument("MultiPoly: empty variable name");
    MultiPoly p;
    p.vars_ = {name};
    p.terms_.emplace(Exponents{1}, GaussRational(1));
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exponents& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

GaussRational MultiPoly::constant_value() const {
    if (terms_.empty()) return GaussRational(0);
    if (!is_constant()) throw std::logic_error("MultiPoly: not a constant");
    return terms_.begin()->second;
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned t = 0;
        for (unsigned x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

unsigned MultiPoly::degree_in(const std::string& var) const {
    const auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return 0;
    const size_t idx = static_cast<size_t>(it - vars_.begin());
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return d;
}

void MultiPoly::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
    if (vars_.empty()) return;
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
    std::vector<std::string> nv;
    std::vector<size_t> keep;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) {
            nv.push_back(vars_[i]);
            keep.push_back(i);
        }
    TermMap nt;
    for (const auto& [e, c] : terms_) {
        Exponents ne(keep.size());
        for (size_t i = 0; i < keep.size(); ++i) ne[i] = e[keep[i]];
        nt.emplace(std::move(ne), c);
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
}

namespace {

// Index map from a merged variable list back into each operand.
std::vector<int> positions(const std::vector<std::string>& merged, const std::vector<std::string>& v) {
    std::vector<int> pos(merged.size(), -1);
    size_t j = 0;
    for (size_t i = 0; i < merged.size() && j < v.size(); ++i)
        if (merged[i] == v[j]) pos[i] = static_cast<int>(j++);
    return pos;
}

MultiPoly::Exponents remap(const MultiPoly::Exponents& e, const std::vector<int>& pos) {
    MultiPoly::Exponents out(pos.size(), 0);
    for (size_t i = 0; i < pos.size(); ++i)
        if (pos[i] >= 0) out[i] = e[static_cast<size_t>(pos[i])];
    return out;
}

}  // namespace

MultiPoly MultiPoly::merge(const MultiPoly& a, const MultiPoly& b, bool subtract) {
    MultiPoly out;
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(out.vars_), VarLess{});
    const auto pa = positions(out.vars_, a.vars_);
    const auto pb = positions(out.vars_, b.vars_);
    for (const auto& [e, c] : a.terms_) out.terms_[remap(e, pa)] += c;
    for (const auto& [e, c] : b.terms_) {
        auto& slot = out.terms_[remap(e, pb)];
        slot = subtract ? slot - c : slot + c;
    }
    out.normalize();
    return out;
}

MultiPoly operator-(const MultiPoly& a) {
    MultiPoly out = a;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return MultiPoly::merge(a, b, false); }
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return MultiPoly::merge(a, b, true); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(out.vars_), VarLess{});
    const auto pa = positions(out.vars_, a.vars_);
    const auto pb = positions(out.vars_, b.vars_);
    for (const auto& [ea, ca] : a.terms_) {
        const auto ra = remap(ea, pa);
        for (const auto& [eb, cb] : b.terms_) {
            auto re = remap(eb, pb);
            for (size_t i = 0; i < re.size(); ++i) re[i] += ra[i];
            out.terms_[re] += ca * cb;
        }
    }
    out.normalize();
    return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly acc(1), base = *this;
    while (e > 0) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

MultiPoly MultiPoly::partial(const std::string& var) const {
    const auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return MultiPoly();
    const size_t idx = static_cast<size_t>(it - vars_.begin());
    MultiPoly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[idx] == 0) continue;
        Exponents ne = e;
        ne[idx] -= 1;
        out.terms_[ne] += c * GaussRational(Rational(static_cast<long>(e[idx])));
    }
    out.normalize();
    return out;
}

std::pair<MultiPoly::Exponents, GaussRational> MultiPoly::leading_term() const {
    if (terms_.empty()) throw std::logic_error("MultiPoly: leading term of zero");
    const auto it = std::prev(terms_.end());
    return {it->first, it->second};
}

Rational MultiPoly::content() const {
    Rational g(0);
    for (const auto& [e, c] : terms_) {
        g = gcd(g, c.re());
        g = gcd(g, c.im());
    }
    return g;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("MultiPoly: division by zero polynomial");
    if (is_zero()) return MultiPoly();
    // Single-divisor reduction in graded lex. If the divisor divides
    // exactly, the leading monomials cancel at every step; a leading
    // monomial that fails to divide proves non-divisibility.
    const auto [dexp, dc] = divisor.leading_term();
    const auto& dvars = divisor.vars();
    MultiPoly rem = *this;
    MultiPoly quot;
    while (!rem.is_zero()) {
        const auto [re, rc] = rem.leading_term();
        const auto& rvars = rem.vars();
        // Map divisor leading exponents into rem's variable list.
        Exponents mapped(rvars.size(), 0);
        {
            size_t j = 0;
            for (size_t i = 0; i < dvars.size(); ++i) {
                while (j < rvars.size() && VarLess{}(rvars[j], dvars[i])) ++j;
                if (j >= rvars.size() || rvars[j] != dvars[i]) {
                    if (dexp[i] > 0) return std::nullopt;
                    continue;
                }
                mapped[j] = dexp[i];
            }
        }
        Exponents qe(rvars.size());
        for (size_t i = 0; i < rvars.size(); ++i) {
            if (re[i] < mapped[i]) return std::nullopt;
            qe[i] = re[i] - mapped[i];
        }
        MultiPoly qmono;
        qmono.vars_ = rvars;
        qmono.terms_.emplace(qe, rc / dc);
        qmono.normalize();
        quot += qmono;
        rem = rem - qmono * divisor;
    }
    return quot;
}

GaussRational MultiPoly::evaluate(const std::map<std::string, GaussRational, VarLess>& point) const {
    for (const auto& v : vars_)
        if (!point.count(v)) throw std::invalid_argument("MultiPoly: no value for variable '" + v + "'");
    GaussRational acc(0);
    for (const auto& [e, c] : terms_) {
        GaussRational t = c;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t *= point.at(vars_[i]).pow(e[i]);
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::conj() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = c.conj();
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    // Leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
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
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (cs.empty())
            s += mono;
        else
            s += cs + (mono.empty() ? "" : "*" + mono);
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

}  // namespace gl2
