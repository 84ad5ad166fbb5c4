#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gtheta/errors.hpp"

namespace gtheta {

// Dense row-major matrix over an exact field (Rational, QuadExt5, GaussSqrt2).
template <typename Field>
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Field(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Field& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Field& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

  ExactMatrix transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw UsageError("matrix shape mismatch");
    ExactMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Field& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) {
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }

  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) {
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }

  ExactMatrix scaled(const Field& s) const {
    ExactMatrix out = *this;
    for (auto& v : out.data_) v *= s;
    return out;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!v.is_zero()) return false;
    return true;
  }

  // In-place reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> reduce() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t p = row;
      while (p < rows_ && (*this)(p, col).is_zero()) ++p;
      if (p == rows_) continue;
      swap_rows(p, row);
      const Field inv = (*this)(row, col).inverse();
      for (std::size_t c = col; c < cols_; ++c) (*this)(row, c) *= inv;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row || (*this)(r, col).is_zero()) continue;
        const Field f = (*this)(r, col);
        for (std::size_t c = col; c < cols_; ++c)
          if (!(*this)(row, c).is_zero()) (*this)(r, c) -= f * (*this)(row, c);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank() const {
    ExactMatrix m = *this;
    return m.reduce().size();
  }

  // Basis of {x : A·x = 0}, one vector per free column.
  std::vector<std::vector<Field>> nullspace() const {
    ExactMatrix m = *this;
    const auto pivots = m.reduce();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Field>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<Field> v(cols_);
      v[free] = Field(1);
      for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  Field determinant() const {
    if (rows_ != cols_) throw UsageError("determinant of a non-square matrix");
    ExactMatrix m = *this;
    Field det(1);
    for (std::size_t col = 0; col < cols_; ++col) {
      std::size_t p = col;
      while (p < rows_ && m(p, col).is_zero()) ++p;
      if (p == rows_) return Field(0);
      if (p != col) {
        m.swap_rows(p, col);
        det = -det;
      }
      det *= m(col, col);
      const Field inv = m(col, col).inverse();
      for (std::size_t r = col + 1; r < rows_; ++r) {
        if (m(r, col).is_zero()) continue;
        const Field f = m(r, col) * inv;
        for (std::size_t c = col; c < cols_; ++c) m(r, c) -= f * m(col, c);
      }
    }
    return det;
  }

  ExactMatrix inverse() const {
    if (rows_ != cols_) throw UsageError("inverse of a non-square matrix");
    ExactMatrix aug(rows_, 2 * cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
      aug(r, cols_ + r) = Field(1);
    }
    const auto pivots = aug.reduce();
    if (pivots.size() < rows_ || pivots.back() >= cols_) throw DomainError("singular matrix");
    ExactMatrix inv(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) inv(r, c) = aug(r, cols_ + c);
    return inv;
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Field> data_;
};

}  // namespace gtheta
