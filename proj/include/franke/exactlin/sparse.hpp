#pragma once

#include "franke/exactlin/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace franke::exactlin {

/// Sorted (index, nonzero value) pairs.
using SparseVec = std::vector<std::pair<std::uint32_t, Integer>>;

inline SparseVec sparse_from_dense(const std::vector<Integer>& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return s;
}

inline std::vector<Integer> dense_from_sparse(const SparseVec& s, std::size_t n) {
  std::vector<Integer> v(n);
  for (const auto& [i, x] : s) v[i] = x;
  return v;
}

/// a + q * b
inline SparseVec axpy(const SparseVec& a, const Integer& q, const SparseVec& b) {
  if (q == 0) return a;
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, q * b[j].second);
      ++j;
    } else {
      Integer s = a[i].second + q * b[j].second;
      if (s != 0) out.emplace_back(a[i].first, std::move(s));
      ++i, ++j;
    }
  }
  return out;
}

inline SparseVec scaled(const SparseVec& a, const Integer& q) {
  if (q == 0) return {};
  SparseVec out = a;
  for (auto& e : out) e.second *= q;
  return out;
}

inline Integer sparse_get(const SparseVec& a, std::uint32_t i) {
  auto it = std::lower_bound(a.begin(), a.end(), i, [](const auto& e, std::uint32_t k) { return e.first < k; });
  return (it != a.end() && it->first == i) ? it->second : Integer(0);
}

/// Column-major sparse integer matrix.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

  static SparseMatrix identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.columns_[i].emplace_back(static_cast<std::uint32_t>(i), Integer(1));
    return m;
  }

  static SparseMatrix from_dense(const IntMatrix& d) {
    SparseMatrix m(d.rows(), d.cols());
    for (std::size_t j = 0; j < d.cols(); ++j)
      for (std::size_t i = 0; i < d.rows(); ++i)
        if (d(i, j) != 0) m.columns_[j].emplace_back(static_cast<std::uint32_t>(i), d(i, j));
    return m;
  }

  IntMatrix to_dense() const {
    IntMatrix d(rows_, cols_);
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& [i, x] : columns_[j]) d(i, j) = x;
    return d;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const SparseVec& column(std::size_t j) const { return columns_[j]; }

  void set_column(std::size_t j, SparseVec v) {
    require(v.empty() || v.back().first < rows_, ErrorKind::shape_mismatch, "sparse column index out of range");
    columns_[j] = std::move(v);
  }

  /// Adds x at (i, j); entries may be pushed in any order.
  void add(std::size_t i, std::size_t j, const Integer& x) {
    require(i < rows_ && j < cols_, ErrorKind::shape_mismatch, "sparse entry out of range");
    if (x == 0) return;
    auto& c = columns_[j];
    auto it = std::lower_bound(c.begin(), c.end(), static_cast<std::uint32_t>(i),
                               [](const auto& e, std::uint32_t k) { return e.first < k; });
    if (it != c.end() && it->first == i) {
      it->second += x;
      if (it->second == 0) c.erase(it);
    } else {
      c.insert(it, {static_cast<std::uint32_t>(i), x});
    }
  }

  Integer get(std::size_t i, std::size_t j) const { return sparse_get(columns_[j], static_cast<std::uint32_t>(i)); }

  bool is_zero() const {
    for (const auto& c : columns_)
      if (!c.empty()) return false;
    return true;
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
  }

  SparseVec apply(const SparseVec& x) const {
    SparseVec y;
    for (const auto& [j, v] : x) {
      require(j < cols_, ErrorKind::shape_mismatch, "sparse apply index out of range");
      y = axpy(y, v, columns_[j]);
    }
    return y;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    require(a.cols_ == b.rows_, ErrorKind::shape_mismatch, "sparse product dimensions");
    SparseMatrix c(a.rows_, b.cols_);
    for (std::size_t j = 0; j < b.cols_; ++j) c.columns_[j] = a.apply(b.columns_[j]);
    return c;
  }

  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorKind::shape_mismatch, "sparse sum dimensions");
    SparseMatrix c(a.rows_, a.cols_);
    for (std::size_t j = 0; j < a.cols_; ++j) c.columns_[j] = axpy(a.columns_[j], 1, b.columns_[j]);
    return c;
  }

  SparseMatrix scaled(const Integer& q) const {
    SparseMatrix c(rows_, cols_);
    for (std::size_t j = 0; j < cols_; ++j) c.columns_[j] = exactlin::scaled(columns_[j], q);
    return c;
  }

  friend SparseMatrix operator-(const SparseMatrix& a) { return a.scaled(-1); }
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return a + (-b); }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.columns_ == b.columns_;
  }

  SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows_);
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& [i, x] : columns_[j]) t.columns_[i].emplace_back(static_cast<std::uint32_t>(j), x);
    return t;
  }

  /// Places this matrix at (r0, c0) inside out.
  void paste_into(SparseMatrix& out, std::size_t r0, std::size_t c0, const Integer& scale = 1) const {
    require(r0 + rows_ <= out.rows_ && c0 + cols_ <= out.cols_, ErrorKind::shape_mismatch, "paste out of range");
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& [i, x] : columns_[j]) out.add(r0 + i, c0 + j, scale * x);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVec> columns_;
};

/// Kronecker product a (x) b with index (i_a * rows_b + i_b, j_a * cols_b + j_b).
inline SparseMatrix kronecker(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ja = 0; ja < a.cols(); ++ja)
    for (std::size_t jb = 0; jb < b.cols(); ++jb) {
      SparseVec col;
      for (const auto& [ia, x] : a.column(ja))
        for (const auto& [ib, y] : b.column(jb))
          col.emplace_back(static_cast<std::uint32_t>(ia * b.rows() + ib), x * y);
      k.set_column(ja * b.cols() + jb, std::move(col));
    }
  return k;
}

}  // namespace franke::exactlin
