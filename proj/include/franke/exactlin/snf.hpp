#pragma once

#include "franke/exactlin/matrix.hpp"

#include <optional>
#include <vector>

namespace franke::exactlin {

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... .
struct SmithForm {
  IntMatrix d;
  IntMatrix u, v;
  IntMatrix u_inv, v_inv;
  std::vector<Integer> diagonal;  // the nonzero invariant factors, all positive
  std::size_t rank() const { return diagonal.size(); }
};

namespace detail {

class SnfWorker {
 public:
  SnfWorker(const IntMatrix& a, bool track)
      : a_(a), track_(track) {
    if (track_) {
      u_ = IntMatrix::identity(a.rows());
      ui_ = IntMatrix::identity(a.rows());
      v_ = IntMatrix::identity(a.cols());
      vi_ = IntMatrix::identity(a.cols());
    }
  }

  SmithForm run() {
    const std::size_t m = a_.rows(), n = a_.cols();
    std::size_t t = 0;
    for (; t < m && t < n; ++t) {
      if (!place_pivot(t)) break;
      for (;;) {
        if (!clear_cross(t)) continue;
        if (!enforce_divisibility(t)) continue;
        break;
      }
      if (a_(t, t) < 0) negate_row(t);
    }
    SmithForm out;
    for (std::size_t i = 0; i < t; ++i) out.diagonal.push_back(a_(i, i));
    out.d = std::move(a_);
    out.u = std::move(u_);
    out.v = std::move(v_);
    out.u_inv = std::move(ui_);
    out.v_inv = std::move(vi_);
    return out;
  }

 private:
  // Smallest nonzero |entry| in the trailing block; ties go to the lowest row, then column.
  bool place_pivot(std::size_t t) {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < a_.rows(); ++i)
      for (std::size_t j = t; j < a_.cols(); ++j) {
        const Integer& x = a_(i, j);
        if (x == 0) continue;
        Integer ax = abs(x);
        if (!found || ax < best) {
          best = std::move(ax);
          bi = i;
          bj = j;
          found = true;
        }
      }
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // Reduce row t and column t modulo the pivot. Returns true once both are clear.
  bool clear_cross(std::size_t t) {
    bool clear = true;
    for (std::size_t i = t + 1; i < a_.rows(); ++i) {
      if (a_(i, t) == 0) continue;
      Integer q = a_(i, t) / a_(t, t);
      add_row(i, t, -q);
      if (a_(i, t) != 0) clear = false;
    }
    for (std::size_t j = t + 1; j < a_.cols(); ++j) {
      if (a_(t, j) == 0) continue;
      Integer q = a_(t, j) / a_(t, t);
      add_col(j, t, -q);
      if (a_(t, j) != 0) clear = false;
    }
    if (clear) return true;
    // A remainder survived: move the smallest entry of the cross onto the diagonal.
    Integer best = abs(a_(t, t));
    std::size_t bi = t, bj = t;
    for (std::size_t i = t + 1; i < a_.rows(); ++i)
      if (a_(i, t) != 0 && abs(a_(i, t)) < best) best = abs(a_(i, t)), bi = i, bj = t;
    for (std::size_t j = t + 1; j < a_.cols(); ++j)
      if (a_(t, j) != 0 && abs(a_(t, j)) < best) best = abs(a_(t, j)), bi = t, bj = j;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return false;
  }

  bool enforce_divisibility(std::size_t t) {
    const Integer& p = a_(t, t);
    for (std::size_t i = t + 1; i < a_.rows(); ++i)
      for (std::size_t j = t + 1; j < a_.cols(); ++j)
        if (a_(i, j) % p != 0) {
          add_row(t, i, 1);
          return false;
        }
    return true;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    a_.swap_rows(a, b);
    if (track_) u_.swap_rows(a, b), ui_.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    a_.swap_cols(a, b);
    if (track_) v_.swap_cols(a, b), vi_.swap_rows(a, b);
  }
  void add_row(std::size_t a, std::size_t b, const Integer& q) {
    a_.add_row(a, b, q);
    if (track_) u_.add_row(a, b, q), ui_.add_col(b, a, -q);
  }
  void add_col(std::size_t a, std::size_t b, const Integer& q) {
    a_.add_col(a, b, q);
    if (track_) v_.add_col(a, b, q), vi_.add_row(b, a, -q);
  }
  void negate_row(std::size_t a) {
    a_.negate_row(a);
    if (track_) u_.negate_row(a), ui_.negate_col(a);
  }

  IntMatrix a_;
  bool track_;
  IntMatrix u_, ui_, v_, vi_;
};

}  // namespace detail

inline SmithForm smith_normal_form(const IntMatrix& a) { return detail::SnfWorker(a, true).run(); }

/// Invariant factors only; skips transform bookkeeping.
inline std::vector<Integer> invariant_factors(const IntMatrix& a) {
  return detail::SnfWorker(a, false).run().diagonal;
}

inline std::size_t rank(const IntMatrix& a) { return invariant_factors(a).size(); }

/// Columns form a basis of the integer kernel.
inline IntMatrix kernel_basis(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  return s.v.cols_range(s.rank(), a.cols() - s.rank());
}

/// Columns form a basis of the image lattice.
inline IntMatrix image_basis(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  IntMatrix b(a.rows(), s.rank());
  for (std::size_t j = 0; j < s.rank(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) b(i, j) = s.u_inv(i, j) * s.diagonal[j];
  return b;
}

/// Some x with a * x = b, if one exists.
inline std::optional<std::vector<Integer>> solve(const SmithForm& s, const std::vector<Integer>& b) {
  require(b.size() == s.u.cols(), ErrorKind::shape_mismatch, "solve right-hand side length");
  std::vector<Integer> c = s.u.apply(b);
  std::vector<Integer> y(s.v.rows());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < s.rank()) {
      if (c[i] % s.diagonal[i] != 0) return std::nullopt;
      y[i] = c[i] / s.diagonal[i];
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return s.v.apply(y);
}

inline std::optional<std::vector<Integer>> solve(const IntMatrix& a, const std::vector<Integer>& b) {
  return solve(smith_normal_form(a), b);
}

/// Every column of b lies in the column lattice of a.
inline bool lattice_contains(const IntMatrix& a, const IntMatrix& b) {
  require(a.rows() == b.rows(), ErrorKind::shape_mismatch, "lattice ambient dimensions");
  if (b.cols() == 0) return true;
  SmithForm s = smith_normal_form(a);
  for (std::size_t j = 0; j < b.cols(); ++j)
    if (!solve(s, b.col(j))) return false;
  return true;
}

inline bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
  return lattice_contains(a, b) && lattice_contains(b, a);
}

inline Integer determinant_abs_if_square(const IntMatrix& a) {
  require(a.rows() == a.cols(), ErrorKind::shape_mismatch, "determinant of non-square matrix");
  auto f = invariant_factors(a);
  if (f.size() < a.rows()) return 0;
  Integer p = 1;
  for (const auto& x : f) p *= x;
  return p;
}

inline bool is_unimodular(const IntMatrix& a) {
  return a.rows() == a.cols() && determinant_abs_if_square(a) == 1;
}

}  // namespace franke::exactlin
