#pragma once

#include <stdexcept>
#include <vector>

namespace gl2 {

/// Small dense matrix over an exact field S. S needs S(int), +, -, *, /,
/// is_zero() and ==. Pivoting picks the first nonzero entry (no magnitude
/// over an exact field).
template <class S>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, S(0)) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = S(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    S& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const S& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        x.check_same_shape(y);
        Matrix out(x.rows_, x.cols_);
        for (size_t i = 0; i < x.a_.size(); ++i) out.a_[i] = x.a_[i] + y.a_[i];
        return out;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        x.check_same_shape(y);
        Matrix out(x.rows_, x.cols_);
        for (size_t i = 0; i < x.a_.size(); ++i) out.a_[i] = x.a_[i] - y.a_[i];
        return out;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix out(x.rows_, y.cols_);
        for (size_t r = 0; r < x.rows_; ++r)
            for (size_t k = 0; k < x.cols_; ++k) {
                const S& v = x.at(r, k);
                if (v.is_zero()) continue;
                for (size_t c = 0; c < y.cols_; ++c) out.at(r, c) += v * y.at(k, c);
            }
        return out;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    Matrix scaled(const S& c) const {
        Matrix out = *this;
        for (auto& v : out.a_) v = v * c;
        return out;
    }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (size_t r = 0; r < rows_; ++r)
            for (size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
        return out;
    }

    std::vector<S> apply(const std::vector<S>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Matrix: vector size mismatch");
        std::vector<S> out(rows_, S(0));
        for (size_t r = 0; r < rows_; ++r)
            for (size_t c = 0; c < cols_; ++c)
                if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
        return out;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }

    S trace() const {
        S t(0);
        for (size_t i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
        return t;
    }

    S determinant() const {
        if (rows_ != cols_) throw std::invalid_argument("Matrix: determinant of non-square");
        Matrix m = *this;
        S det(1);
        for (size_t c = 0; c < m.cols_; ++c) {
            size_t piv = c;
            while (piv < m.rows_ && m.at(piv, c).is_zero()) ++piv;
            if (piv == m.rows_) return S(0);
            if (piv != c) {
                m.swap_rows(piv, c);
                det = S(0) - det;
            }
            det = det * m.at(c, c);
            const S inv = S(1) / m.at(c, c);
            for (size_t r = c + 1; r < m.rows_; ++r) {
                if (m.at(r, c).is_zero()) continue;
                const S f = m.at(r, c) * inv;
                for (size_t k = c; k < m.cols_; ++k) m.at(r, k) = m.at(r, k) - f * m.at(c, k);
            }
        }
        return det;
    }

    size_t rank() const {
        Matrix m = *this;
        size_t rk = 0;
        for (size_t c = 0; c < m.cols_ && rk < m.rows_; ++c) {
            size_t piv = rk;
            while (piv < m.rows_ && m.at(piv, c).is_zero()) ++piv;
            if (piv == m.rows_) continue;
            m.swap_rows(piv, rk);
            const S inv = S(1) / m.at(rk, c);
            for (size_t r = rk + 1; r < m.rows_; ++r) {
                if (m.at(r, c).is_zero()) continue;
                const S f = m.at(r, c) * inv;
                for (size_t k = c; k < m.cols_; ++k) m.at(r, k) = m.at(r, k) - f * m.at(rk, k);
            }
            ++rk;
        }
        return rk;
    }

    /// Gauss-Jordan inverse; throws std::domain_error when singular.
    Matrix inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("Matrix: inverse of non-square");
        Matrix m = *this;
        Matrix inv = identity(rows_);
        for (size_t c = 0; c < cols_; ++c) {
            size_t piv = c;
            while (piv < rows_ && m.at(piv, c).is_zero()) ++piv;
            if (piv == rows_) throw std::domain_error("Matrix: singular");
            m.swap_rows(piv, c);
            inv.swap_rows(piv, c);
            const S d = S(1) / m.at(c, c);
            for (size_t k = 0; k < cols_; ++k) {
                m.at(c, k) = m.at(c, k) * d;
                inv.at(c, k) = inv.at(c, k) * d;
            }
            for (size_t r = 0; r < rows_; ++r) {
                if (r == c || m.at(r, c).is_zero()) continue;
                const S f = m.at(r, c);
                for (size_t k = 0; k < cols_; ++k) {
                    m.at(r, k) = m.at(r, k) - f * m.at(c, k);
                    inv.at(r, k) = inv.at(r, k) - f * inv.at(c, k);
                }
            }
        }
        return inv;
    }

    /// Solves A x = b; throws when singular.
    std::vector<S> solve(const std::vector<S>& b) const { return inverse().apply(b); }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }
    void swap_rows(size_t r1, size_t r2) {
        for (size_t c = 0; c < cols_; ++c) std::swap(at(r1, c), at(r2, c));
    }

    size_t rows_, cols_;
    std::vector<S> a_;
};

}  // namespace gl2
