#pragma once

#include "franke/percomplex/complex.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace franke::percomplex {

using exactlin::Presentation;

/// Z/N-graded finitely generated abelian group, one invariant-factor group per slot.
class GradedModule {
 public:
  GradedModule() = default;
  GradedModule(int period, std::vector<FgAbelianGroup> groups) : period_(period), groups_(std::move(groups)) {
    require(groups_.size() == static_cast<std::size_t>(period_), ErrorKind::shape_mismatch, "one group per slot");
  }

  static GradedModule zero(int period) { return GradedModule(period, std::vector<FgAbelianGroup>(period)); }

  static GradedModule concentrated(int period, int slot, FgAbelianGroup g) {
    GradedModule m = zero(period);
    m.groups_[slot_mod(slot, period)] = std::move(g);
    return m;
  }

  int period() const { return period_; }
  const FgAbelianGroup& group(long long n) const { return groups_[slot_mod(n, period_)]; }
  const std::vector<FgAbelianGroup>& groups() const { return groups_; }
  Presentation presentation(long long n) const { return Presentation::of(group(n)); }

  bool is_free() const {
    for (const auto& g : groups_)
      if (!g.is_free()) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& g : groups_)
      if (!g.is_zero()) return false;
    return true;
  }

  bool concentrated_in(long long slot) const {
    for (int n = 0; n < period_; ++n)
      if (n != slot_mod(slot, period_) && !groups_[n].is_zero()) return false;
    return true;
  }

  GradedModule shifted(long long k) const {
    std::vector<FgAbelianGroup> g(period_);
    for (int n = 0; n < period_; ++n) g[n] = group(n - k);
    return GradedModule(period_, std::move(g));
  }

  friend bool operator==(const GradedModule& a, const GradedModule& b) {
    return a.period_ == b.period_ && a.groups_ == b.groups_;
  }

  std::string str() const {
    std::string s = "(";
    for (int n = 0; n < period_; ++n) s += (n ? ", " : "") + groups_[n].str();
    return s + ")";
  }

 private:
  int period_ = 1;
  std::vector<FgAbelianGroup> groups_{FgAbelianGroup()};
};

inline std::ostream& operator<<(std::ostream& os, const GradedModule& m) { return os << m.str(); }

inline bool is_isomorphic(const GradedModule& a, const GradedModule& b) { return a == b; }

inline GradedModule direct_sum(const GradedModule& a, const GradedModule& b) {
  require(a.period() == b.period(), ErrorKind::period_mismatch, "direct sum of different periods");
  std::vector<FgAbelianGroup> g;
  for (int n = 0; n < a.period(); ++n) g.push_back(exactlin::direct_sum(a.group(n), b.group(n)));
  return GradedModule(a.period(), std::move(g));
}

/// Slot n is the sum over i of A_i (x) B_{n-i}.
inline GradedModule graded_tensor(const GradedModule& a, const GradedModule& b) {
  require(a.period() == b.period(), ErrorKind::period_mismatch, "tensor of different periods");
  const int N = a.period();
  std::vector<FgAbelianGroup> g(N);
  for (int n = 0; n < N; ++n)
    for (int i = 0; i < N; ++i) g[n] = exactlin::direct_sum(g[n], exactlin::tensor(a.group(i), b.group(n - i)));
  return GradedModule(N, std::move(g));
}

/// Slot n is the sum over i + j = n - 1 of Tor(A_i, B_j).
inline GradedModule graded_tor(const GradedModule& a, const GradedModule& b) {
  require(a.period() == b.period(), ErrorKind::period_mismatch, "Tor of different periods");
  const int N = a.period();
  std::vector<FgAbelianGroup> g(N);
  for (int n = 0; n < N; ++n)
    for (int i = 0; i < N; ++i) g[n] = exactlin::direct_sum(g[n], exactlin::tor(a.group(i), b.group(n - 1 - i)));
  return GradedModule(N, std::move(g));
}

/// Map of graded groups raising slot by `shift`, written on presentations.
/// components[n] has target.generators(n + shift) rows and source.generators(n) columns.
struct GradedMap {
  int period = 1;
  int shift = 0;
  std::vector<Presentation> source, target;
  std::vector<IntMatrix> components;

  GradedMap() = default;
  GradedMap(int period_, int shift_, std::vector<Presentation> src, std::vector<Presentation> tgt,
            std::vector<IntMatrix> comps)
      : period(period_), shift(shift_), source(std::move(src)), target(std::move(tgt)), components(std::move(comps)) {
    require(source.size() == static_cast<std::size_t>(period) && target.size() == source.size() &&
                components.size() == source.size(),
            ErrorKind::shape_mismatch, "graded map needs one component per slot");
    for (int n = 0; n < period; ++n) {
      const auto& c = components[n];
      const auto& t = tgt_at(n);
      require(c.rows() == t.generators && c.cols() == source[n].generators, ErrorKind::shape_mismatch,
              "graded map component " + std::to_string(n) + " has wrong shape");
      require(exactlin::lattice_contains(t.relations, c * source[n].relations), ErrorKind::shape_mismatch,
              "graded map does not respect relations at slot " + std::to_string(n));
    }
  }

  const Presentation& tgt_at(int n) const { return target[slot_mod(n + shift, period)]; }
  const IntMatrix& component(long long n) const { return components[slot_mod(n, period)]; }

  /// Lift of the image at slot n + shift: image columns together with target relations.
  IntMatrix image_lift(int n) const { return exactlin::hstack(components[n], tgt_at(n).relations); }

  /// Spanning set of elements of Z^source(n) mapping into the target relations.
  IntMatrix kernel_lift(int n) const {
    IntMatrix k = exactlin::kernel_basis(image_lift(n));
    return k.rows_range(0, source[n].generators);
  }

  bool is_zero_at(int n) const { return exactlin::lattice_contains(tgt_at(n).relations, components[n]); }
  bool is_injective_at(int n) const { return exactlin::lattice_contains(source[n].relations, kernel_lift(n)); }
  bool is_surjective_at(int n) const { return exactlin::cokernel(image_lift(n)).is_zero(); }

  FgAbelianGroup kernel(int n) const {
    return exactlin::subquotient(exactlin::image_basis(kernel_lift(n)), source[n].relations);
  }
  FgAbelianGroup image(int n) const {
    return exactlin::subquotient(exactlin::image_basis(image_lift(n)), tgt_at(n).relations);
  }
  FgAbelianGroup cokernel(int n) const { return exactlin::cokernel(image_lift(n)); }

  bool all(bool (GradedMap::*pred)(int) const) const {
    for (int n = 0; n < period; ++n)
      if (!(this->*pred)(n)) return false;
    return true;
  }
  bool is_zero() const { return all(&GradedMap::is_zero_at); }
  bool is_injective() const { return all(&GradedMap::is_injective_at); }
  bool is_surjective() const { return all(&GradedMap::is_surjective_at); }
  bool is_isomorphism() const { return is_injective() && is_surjective(); }

  GradedModule source_module() const {
    std::vector<FgAbelianGroup> g;
    for (const auto& p : source) g.push_back(p.group());
    return GradedModule(period, std::move(g));
  }
  GradedModule target_module() const {
    std::vector<FgAbelianGroup> g;
    for (const auto& p : target) g.push_back(p.group());
    return GradedModule(period, std::move(g));
  }
  GradedModule cokernel_module() const {
    std::vector<FgAbelianGroup> g(period);
    for (int n = 0; n < period; ++n) g[slot_mod(n + shift, period)] = cokernel(n);
    return GradedModule(period, std::move(g));
  }
};

/// g after f.
inline GradedMap compose(const GradedMap& g, const GradedMap& f) {
  require(g.period == f.period, ErrorKind::period_mismatch, "composing graded maps of different periods");
  std::vector<IntMatrix> c(f.period);
  for (int n = 0; n < f.period; ++n) c[n] = g.component(n + f.shift) * f.components[n];
  return GradedMap(f.period, f.shift + g.shift, f.source, g.target, std::move(c));
}

/// im f equals ker g in the middle group at slot n + f.shift.
inline bool exact_at(const GradedMap& f, const GradedMap& g, int n) {
  const int m = slot_mod(n + f.shift, f.period);
  return exactlin::lattice_equal(f.image_lift(n), exactlin::hstack(g.kernel_lift(m), g.source[m].relations));
}

inline bool exact(const GradedMap& f, const GradedMap& g) {
  for (int n = 0; n < f.period; ++n)
    if (!exact_at(f, g, n)) return false;
  return true;
}

}  // namespace franke::percomplex
