#pragma once

#include <map>
#include <stdexcept>
#include <tuple>

#include "gl2/matrix.hpp"

namespace gl2 {

/// Form-valued antisymmetric 2-tensor: components T^r_{jl} with r the value
/// index and (j, l) the antisymmetric pair, all in 0..k. Stored sparsely
/// for j < l; T^r_{jl} is the coefficient of the wedge basis element
/// w^j ^ w^l (j < l) in the r-th value component.
///
/// The scalar ring S is anything with S(int), ring ops and is_zero():
/// exact numbers for point data, polynomials for symbolic verification,
/// rational functions for whole-patch analysis.
template <class S>
class TorsionTensor {
public:
    using Key = std::tuple<int, int, int>;  // (r, j, l) with j < l

    explicit TorsionTensor(int k) : k_(k) {
        if (k < 0) throw std::invalid_argument("TorsionTensor: negative degree");
    }

    int degree() const { return k_; }
    const std::map<Key, S>& components() const { return c_; }

    void check_index(int i) const {
        if (i < 0 || i > k_) throw std::invalid_argument("TorsionTensor: index out of range");
    }

    /// Signed accessor: get(r, l, j) = -get(r, j, l); diagonal pairs are 0.
    S get(int r, int j, int l) const {
        check_index(r);
        check_index(j);
        check_index(l);
        if (j == l) return S(0);
        const bool flip = j > l;
        if (flip) std::swap(j, l);
        const auto it = c_.find({r, j, l});
        if (it == c_.end()) return S(0);
        return flip ? S(0) - it->second : it->second;
    }

    void add(int r, int j, int l, const S& v) {
        check_index(r);
        check_index(j);
        check_index(l);
        if (j == l) throw std::invalid_argument("TorsionTensor: diagonal pair");
        S val = v;
        if (j > l) {
            std::swap(j, l);
            val = S(0) - val;
        }
        auto [it, inserted] = c_.try_emplace({r, j, l}, val);
        if (!inserted) it->second += val;
        if (it->second.is_zero()) c_.erase(it);
    }

    void set(int r, int j, int l, const S& v) {
        add(r, j, l, v - get(r, j, l));
    }

    bool is_zero() const { return c_.empty(); }

    friend TorsionTensor operator+(const TorsionTensor& a, const TorsionTensor& b) {
        if (a.k_ != b.k_) throw std::invalid_argument("TorsionTensor: degree mismatch");
        TorsionTensor out = a;
        for (const auto& [key, v] : b.c_) out.add(std::get<0>(key), std::get<1>(key), std::get<2>(key), v);
        return out;
    }

    friend bool operator==(const TorsionTensor& a, const TorsionTensor& b) {
        if (a.k_ != b.k_) return false;
        // Sparse maps never hold zeros, but S may have non-canonical equal
        // representations (rational functions), so compare by value.
        for (const auto& [key, v] : a.c_)
            if (!(v == b.get(std::get<0>(key), std::get<1>(key), std::get<2>(key)))) return false;
        for (const auto& [key, v] : b.c_)
            if (!(v == a.get(std::get<0>(key), std::get<1>(key), std::get<2>(key)))) return false;
        return true;
    }
    friend bool operator!=(const TorsionTensor& a, const TorsionTensor& b) { return !(a == b); }

    /// Matrix of the contraction with the j-th frame vector: column l holds
    /// the value components of the tensor evaluated on (e_j, e_l).
    Matrix<S> contraction(int j) const {
        check_index(j);
        const size_t n = static_cast<size_t>(k_) + 1;
        Matrix<S> m(n, n);
        for (const auto& [key, v] : c_) {
            const auto [r, a, b] = key;
            if (a == j) m.at(static_cast<size_t>(r), static_cast<size_t>(b)) += v;
            if (b == j) m.at(static_cast<size_t>(r), static_cast<size_t>(a)) -= v;
        }
        return m;
    }

    /// Value components as a full antisymmetric matrix over the form
    /// indices, for a fixed value index r.
    Matrix<S> value_matrix(int r) const {
        check_index(r);
        const size_t n = static_cast<size_t>(k_) + 1;
        Matrix<S> m(n, n);
        for (const auto& [key, v] : c_) {
            const auto [rr, a, b] = key;
            if (rr != r) continue;
            m.at(static_cast<size_t>(a), static_cast<size_t>(b)) += v;
            m.at(static_cast<size_t>(b), static_cast<size_t>(a)) -= v;
        }
        return m;
    }

private:
    int k_;
    std::map<Key, S> c_;
};

}  // namespace gl2
