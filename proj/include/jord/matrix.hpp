#pragma once

#include "jord/rational.hpp"

#include <optional>
#include <vector>

namespace jord {

// Dense exact matrix over a field F (Rational or RatFunc). All algorithms are
// exact; there is no pivoting heuristic beyond "first nonzero".
template <typename F>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    F& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const F& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix c(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (aik == F(0)) continue;
                for (size_t j = 0; j < b.cols_; ++j) c(i, j) = c(i, j) + aik * b(k, j);
            }
        return c;
    }

    std::vector<F> apply(const std::vector<F>& v) const {
        std::vector<F> r(rows_, F(0));
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if (!(v[j] == F(0))) r[i] = r[i] + (*this)(i, j) * v[j];
        return r;
    }

    // Row echelon form by exact Gaussian elimination; returns pivot columns.
    std::vector<size_t> echelonize() {
        std::vector<size_t> pivots;
        size_t row = 0;
        for (size_t col = 0; col < cols_ && row < rows_; ++col) {
            size_t p = row;
            while (p < rows_ && (*this)(p, col) == F(0)) ++p;
            if (p == rows_) continue;
            if (p != row) swap_rows(p, row);
            F inv = F(1) / (*this)(row, col);
            for (size_t j = col; j < cols_; ++j) (*this)(row, j) = (*this)(row, j) * inv;
            for (size_t i = 0; i < rows_; ++i) {
                if (i == row) continue;
                F f = (*this)(i, col);
                if (f == F(0)) continue;
                for (size_t j = col; j < cols_; ++j)
                    (*this)(i, j) = (*this)(i, j) - f * (*this)(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    size_t rank() const {
        Matrix m = *this;
        return m.echelonize().size();
    }

    // Basis of the right null space, one column vector per basis element.
    std::vector<std::vector<F>> kernel() const {
        Matrix m = *this;
        std::vector<size_t> pivots = m.echelonize();
        std::vector<bool> is_pivot(cols_, false);
        for (size_t c : pivots) is_pivot[c] = true;
        std::vector<std::vector<F>> basis;
        for (size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<F> v(cols_, F(0));
            v[free] = F(1);
            for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F(0) - m(r, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // Exact determinant. Fraction-free (Bareiss) elimination keeps the
    // intermediate entries as ring elements divided by previous pivots.
    F determinant() const {
        if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
        size_t n = rows_;
        if (n == 0) return F(1);
        Matrix m = *this;
        F prev = F(1);
        int sign = 1;
        for (size_t k = 0; k + 1 < n; ++k) {
            size_t p = k;
            while (p < n && m(p, k) == F(0)) ++p;
            if (p == n) return F(0);
            if (p != k) {
                m.swap_rows(p, k);
                sign = -sign;
            }
            for (size_t i = k + 1; i < n; ++i) {
                for (size_t j = k + 1; j < n; ++j)
                    m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
                m(i, k) = F(0);
            }
            prev = m(k, k);
        }
        F d = m(n - 1, n - 1);
        return sign < 0 ? F(0) - d : d;
    }

    std::optional<Matrix> inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
        size_t n = rows_;
        Matrix aug(n, 2 * n);
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
            aug(i, n + i) = F(1);
        }
        auto pivots = aug.echelonize();
        if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
        Matrix inv(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
        return inv;
    }

    void swap_rows(size_t a, size_t b) {
        for (size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

private:
    size_t rows_, cols_;
    std::vector<F> data_;
};

// Span rank of a set of vectors; also used for exact subspace membership.
template <typename F>
size_t span_rank(const std::vector<std::vector<F>>& vecs) {
    if (vecs.empty()) return 0;
    Matrix<F> m(vecs.size(), vecs[0].size());
    for (size_t i = 0; i < vecs.size(); ++i)
        for (size_t j = 0; j < vecs[i].size(); ++j) m(i, j) = vecs[i][j];
    return m.rank();
}

template <typename F>
bool in_span(const std::vector<std::vector<F>>& span, const std::vector<F>& v) {
    std::vector<std::vector<F>> all = span;
    all.push_back(v);
    return span_rank(all) == span_rank(span);
}

} // namespace jord
