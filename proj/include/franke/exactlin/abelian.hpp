#pragma once

#include "franke/exactlin/snf.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

namespace franke::exactlin {

/// Z^free_rank plus cyclic factors Z/t_1 + ... with 1 < t_1 | t_2 | ... .
/// Canonical generator order: torsion generators (ascending), then free ones.
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;
  FgAbelianGroup(std::size_t free_rank, std::vector<Integer> torsion)
      : free_rank_(free_rank), torsion_(std::move(torsion)) {
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
      require(torsion_[i] > 1, ErrorKind::shape_mismatch, "torsion factors must exceed 1");
      require(i == 0 || torsion_[i] % torsion_[i - 1] == 0, ErrorKind::shape_mismatch,
              "torsion factors must form a divisibility chain");
    }
  }

  static FgAbelianGroup free(std::size_t r) { return FgAbelianGroup(r, {}); }

  /// Normalizes an arbitrary list of cyclic orders (0 = infinite, 1 = trivial).
  static FgAbelianGroup from_cyclic_orders(const std::vector<Integer>& orders) {
    std::size_t fr = 0;
    std::vector<Integer> finite;
    for (const auto& o : orders) {
      Integer a = abs(o);
      if (a == 0) ++fr;
      else if (a > 1) finite.push_back(a);
    }
    IntMatrix dm(finite.size(), finite.size());
    for (std::size_t i = 0; i < finite.size(); ++i) dm(i, i) = finite[i];
    std::vector<Integer> tors;
    for (auto& f : invariant_factors(dm))
      if (f > 1) tors.push_back(f);
    return FgAbelianGroup(fr, tors);
  }

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  std::size_t num_generators() const { return torsion_.size() + free_rank_; }
  bool is_zero() const { return num_generators() == 0; }
  bool is_free() const { return torsion_.empty(); }

  /// Order of the i-th canonical generator; 0 means infinite.
  Integer order(std::size_t i) const { return i < torsion_.size() ? torsion_[i] : Integer(0); }

  friend bool operator==(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    return a.free_rank_ == b.free_rank_ && a.torsion_ == b.torsion_;
  }

  std::string str() const {
    std::string s;
    auto add = [&](const std::string& t) { s += (s.empty() ? "" : " + ") + t; };
    if (free_rank_ == 1) add("Z");
    else if (free_rank_ > 1) add("Z^" + std::to_string(free_rank_));
    for (const auto& t : torsion_) add("Z/" + t.str());
    return s.empty() ? "0" : s;
  }

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

inline std::ostream& operator<<(std::ostream& os, const FgAbelianGroup& g) { return os << g.str(); }

inline FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  std::vector<Integer> orders(a.torsion());
  orders.insert(orders.end(), b.torsion().begin(), b.torsion().end());
  orders.resize(orders.size() + a.free_rank() + b.free_rank(), 0);
  return FgAbelianGroup::from_cyclic_orders(orders);
}

/// Z^rows / column span of a.
inline FgAbelianGroup cokernel(const IntMatrix& a) {
  auto f = invariant_factors(a);
  std::vector<Integer> tors;
  for (auto& x : f)
    if (x > 1) tors.push_back(x);
  return FgAbelianGroup(a.rows() - f.size(), tors);
}

/// span(kernel) / span(image). kernel columns must be independent and contain image.
inline FgAbelianGroup subquotient(const IntMatrix& kernel, const IntMatrix& image) {
  require(kernel.rows() == image.rows(), ErrorKind::shape_mismatch, "subquotient ambient dimensions");
  SmithForm s = smith_normal_form(kernel);
  require(s.rank() == kernel.cols(), ErrorKind::shape_mismatch, "subquotient kernel columns must be independent");
  IntMatrix coords(kernel.cols(), image.cols());
  for (std::size_t j = 0; j < image.cols(); ++j) {
    auto x = solve(s, image.col(j));
    require(x.has_value(), ErrorKind::image_not_contained, "image column outside the kernel lattice");
    for (std::size_t i = 0; i < kernel.cols(); ++i) coords(i, j) = (*x)[i];
  }
  return cokernel(coords);
}

inline FgAbelianGroup tensor(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < a.num_generators(); ++i)
    for (std::size_t j = 0; j < b.num_generators(); ++j) {
      Integer p = a.order(i), q = b.order(j);
      orders.push_back(p == 0 ? q : (q == 0 ? p : gcd(p, q)));
    }
  return FgAbelianGroup::from_cyclic_orders(orders);
}

inline FgAbelianGroup tor(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  std::vector<Integer> orders;
  for (const auto& p : a.torsion())
    for (const auto& q : b.torsion()) orders.push_back(gcd(p, q));
  return FgAbelianGroup::from_cyclic_orders(orders);
}

/// A module Z^generators / span(relations columns).
struct Presentation {
  std::size_t generators = 0;
  IntMatrix relations;

  static Presentation of(const FgAbelianGroup& g) {
    Presentation p;
    p.generators = g.num_generators();
    p.relations = IntMatrix(p.generators, g.torsion().size());
    for (std::size_t i = 0; i < g.torsion().size(); ++i) p.relations(i, i) = g.torsion()[i];
    return p;
  }

  static Presentation free(std::size_t n) { return Presentation{n, IntMatrix(n, 0)}; }

  FgAbelianGroup group() const { return cokernel(relations); }
};

/// Presentation of the tensor product on generators a_i (x) b_j, index i * b.generators + j.
inline Presentation tensor(const Presentation& a, const Presentation& b) {
  Presentation p;
  p.generators = a.generators * b.generators;
  std::vector<std::vector<Integer>> rels;
  for (std::size_t r = 0; r < a.relations.cols(); ++r)
    for (std::size_t j = 0; j < b.generators; ++j) {
      std::vector<Integer> v(p.generators);
      for (std::size_t i = 0; i < a.generators; ++i) v[i * b.generators + j] = a.relations(i, r);
      rels.push_back(std::move(v));
    }
  for (std::size_t r = 0; r < b.relations.cols(); ++r)
    for (std::size_t i = 0; i < a.generators; ++i) {
      std::vector<Integer> v(p.generators);
      for (std::size_t j = 0; j < b.generators; ++j) v[i * b.generators + j] = b.relations(j, r);
      rels.push_back(std::move(v));
    }
  p.relations = from_columns(p.generators, rels);
  return p;
}

inline Presentation direct_sum(const Presentation& a, const Presentation& b) {
  Presentation p;
  p.generators = a.generators + b.generators;
  p.relations = IntMatrix(p.generators, a.relations.cols() + b.relations.cols());
  p.relations.set_block(0, 0, a.relations);
  p.relations.set_block(a.generators, a.relations.cols(), b.relations);
  return p;
}

}  // namespace franke::exactlin
