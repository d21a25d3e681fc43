#pragma once

#include "franke/errors.hpp"
#include "franke/exactlin/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace franke::exactlin {

/// Dense row-major integer matrix. Zero rows or columns are allowed.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      require(row.size() == cols_, ErrorKind::shape_mismatch, "ragged matrix literal");
      for (long long v : row) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix column(const std::vector<Integer>& v) {
    IntMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != 0) return false;
    return true;
  }

  std::vector<Integer> col(std::size_t j) const {
    std::vector<Integer> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    require(r0 + nr <= rows_ && c0 + nc <= cols_, ErrorKind::shape_mismatch, "block out of range");
    IntMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  IntMatrix cols_range(std::size_t c0, std::size_t nc) const { return block(0, c0, rows_, nc); }
  IntMatrix rows_range(std::size_t r0, std::size_t nr) const { return block(r0, 0, nr, cols_); }

  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& b) {
    require(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_, ErrorKind::shape_mismatch, "set_block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    require(a.cols_ == b.rows_, ErrorKind::shape_mismatch, "matrix product dimensions");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (b(k, j) != 0) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorKind::shape_mismatch, "matrix sum dimensions");
    IntMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
  }

  friend IntMatrix operator-(const IntMatrix& a) {
    IntMatrix c = a;
    for (auto& v : c.data_) v = -v;
    return c;
  }

  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + (-b); }

  std::vector<Integer> apply(const std::vector<Integer>& x) const {
    require(x.size() == cols_, ErrorKind::shape_mismatch, "matrix-vector dimensions");
    std::vector<Integer> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (x[j] != 0 && (*this)(i, j) != 0) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  // Elementary operations used by the Smith form reduction.
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[a] += q * row[b]
  void add_row(std::size_t a, std::size_t b, const Integer& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(b, j) != 0) (*this)(a, j) += q * (*this)(b, j);
  }
  // col[a] += q * col[b]
  void add_col(std::size_t a, std::size_t b, const Integer& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < rows_; ++i)
      if ((*this)(i, b) != 0) (*this)(i, a) += q * (*this)(i, b);
  }
  void negate_row(std::size_t a) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
  }
  void negate_col(std::size_t a) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) = -(*this)(i, a);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

inline IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  require(a.rows() == b.rows(), ErrorKind::shape_mismatch, "hstack row counts");
  IntMatrix c(a.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(0, a.cols(), b);
  return c;
}

inline IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  require(a.cols() == b.cols(), ErrorKind::shape_mismatch, "vstack column counts");
  IntMatrix c(a.rows() + b.rows(), a.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), 0, b);
  return c;
}

inline IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& cols) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    require(cols[j].size() == rows, ErrorKind::shape_mismatch, "column length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

inline std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
  }
  return os << ']';
}

}  // namespace franke::exactlin
