#pragma once

#include <vector>

#include "bourdeg/field.hpp"

namespace bourdeg {

/// Dense matrix over an exact field; just enough for rank computations,
/// kernels and small inverses.
template <CoefficientField K>
class DenseMatrix {
  public:
    DenseMatrix(std::size_t rows, std::size_t cols, const K& zero)
        : rows_(rows), cols_(cols), zero_(zero), a_(rows * cols, zero) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    K& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const K& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    /// Reduced row echelon form in place; returns the rank.
    std::size_t rref() {
        std::size_t rank = 0;
        pivots_.clear();
        for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
            std::size_t piv = rows_;
            for (std::size_t i = rank; i < rows_; ++i)
                if (!at(i, col).is_zero()) {
                    piv = i;
                    break;
                }
            if (piv == rows_) continue;
            if (piv != rank)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(at(piv, j), at(rank, j));
            K inv = at(rank, col).one() / at(rank, col);
            for (std::size_t j = col; j < cols_; ++j) at(rank, j) = at(rank, j) * inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == rank || at(i, col).is_zero()) continue;
                K f = at(i, col);
                for (std::size_t j = col; j < cols_; ++j) at(i, j) = at(i, j) - f * at(rank, j);
            }
            pivots_.push_back(col);
            ++rank;
        }
        return rank;
    }

    std::size_t rank() const {
        DenseMatrix copy = *this;
        return copy.rref();
    }

    const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

    /// Basis of the right kernel, one vector per non-pivot column.
    std::vector<std::vector<K>> kernel_basis() const {
        DenseMatrix m = *this;
        std::size_t rank = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : m.pivots_) is_pivot[c] = true;
        std::vector<std::vector<K>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<K> v(cols_, zero_);
            v[free] = zero_.one();
            for (std::size_t r = 0; r < rank; ++r) v[m.pivots_[r]] = -m.at(r, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

  private:
    std::size_t rows_, cols_;
    K zero_;
    std::vector<K> a_;
    std::vector<std::size_t> pivots_;
};

/// Inverse of a small square matrix; empty result if singular.
template <CoefficientField K>
std::vector<std::vector<K>> invert_matrix(const std::vector<std::vector<K>>& m, const K& zero) {
    std::size_t n = m.size();
    DenseMatrix<K> aug(n, 2 * n, zero);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m[i][j];
        aug.at(i, n + i) = zero.one();
    }
    std::size_t rank = aug.rref();
    // singular iff some pivot falls into the adjoined identity block
    if (rank != n) return {};
    for (std::size_t i = 0; i < n; ++i)
        if (aug.pivot_columns()[i] != i) return {};
    std::vector<std::vector<K>> inv(n, std::vector<K>(n, zero));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug.at(i, n + j);
    return inv;
}

}  // namespace bourdeg
