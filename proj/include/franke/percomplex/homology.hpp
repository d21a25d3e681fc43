#pragma once

#include "franke/percomplex/graded.hpp"

#include <map>
#include <set>
#include <vector>

namespace franke::percomplex {

namespace detail {

// Gaussian elimination for chain complexes. Each cancellation of a unit entry
// d(b, a) = u splits off the contractible summand span(a, da); the quotient map
// f and the section g are recorded so cycles can be moved in both directions.
class UnitReduction {
 public:
  struct Step {
    std::uint32_t a, b;
    int u;
    SparseVec w;  // d(a) without its b entry
  };

  explicit UnitReduction(const PeriodicComplex& c) : total_(c.total_rank()) {
    col_.resize(total_);
    row_.resize(total_);
    alive_.assign(total_, true);
    lift_.resize(total_);
    for (int n = 0; n < c.period(); ++n) {
      const std::size_t src = c.offset(n), dst = c.offset(n - 1);
      const auto& d = c.d(n);
      for (std::size_t j = 0; j < d.cols(); ++j) {
        const auto g = static_cast<std::uint32_t>(src + j);
        lift_[g].emplace_back(g, Integer(1));
        for (const auto& [i, x] : d.column(j)) {
          const auto h = static_cast<std::uint32_t>(dst + i);
          col_[g].emplace(h, x);
          row_[h].insert(g);
        }
      }
    }
    run();
  }

  bool alive(std::uint32_t g) const { return alive_[g]; }
  const std::map<std::uint32_t, Integer>& column(std::uint32_t g) const { return col_[g]; }
  const SparseVec& lift(std::uint32_t g) const { return lift_[g]; }
  const std::vector<Step>& steps() const { return steps_; }

  /// Applies the recorded projection to a vector in global coordinates.
  std::map<std::uint32_t, Integer> project(std::map<std::uint32_t, Integer> v) const {
    for (const auto& s : steps_) {
      v.erase(s.a);
      auto it = v.find(s.b);
      if (it == v.end()) continue;
      Integer q = -it->second * s.u;
      v.erase(it);
      for (const auto& [i, x] : s.w) {
        auto& e = v[i];
        e += q * x;
        if (e == 0) v.erase(i);
      }
    }
    return v;
  }

 private:
  void run() {
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::uint32_t a = 0; a < total_; ++a) {
        if (!alive_[a] || col_[a].empty()) continue;
        std::uint32_t best = 0;
        std::size_t best_cost = SIZE_MAX;
        for (const auto& [b, x] : col_[a])
          if (b != a && exactlin::is_unit(x) && row_[b].size() < best_cost) best = b, best_cost = row_[b].size();
        if (best_cost == SIZE_MAX) continue;
        cancel(a, best);
        progress = true;
      }
    }
  }

  void cancel(std::uint32_t a, std::uint32_t b) {
    const int u = col_[a].at(b) == 1 ? 1 : -1;
    Step step{a, b, u, {}};
    for (const auto& [i, x] : col_[a])
      if (i != b) step.w.emplace_back(i, x);

    const std::vector<std::uint32_t> hit(row_[b].begin(), row_[b].end());
    for (std::uint32_t x : hit) {
      if (x == a) continue;
      const Integer q = -col_[x].at(b) * u;
      for (const auto& [i, y] : col_[a]) {
        auto [it, fresh] = col_[x].emplace(i, 0);
        it->second += q * y;
        if (it->second == 0) {
          col_[x].erase(it);
          row_[i].erase(x);
        } else if (fresh) {
          row_[i].insert(x);
        }
      }
      lift_[x] = exactlin::axpy(lift_[x], q, lift_[a]);
    }
    for (std::uint32_t x : std::vector<std::uint32_t>(row_[a].begin(), row_[a].end())) col_[x].erase(a);
    for (std::uint32_t g : {a, b}) {
      for (const auto& [i, y] : col_[g]) row_[i].erase(g);
      col_[g].clear();
      row_[g].clear();
      alive_[g] = false;
      lift_[g].clear();
    }
    steps_.push_back(std::move(step));
  }

  std::size_t total_;
  std::vector<std::map<std::uint32_t, Integer>> col_;
  std::vector<std::set<std::uint32_t>> row_;
  std::vector<bool> alive_;
  std::vector<SparseVec> lift_;
  std::vector<Step> steps_;
};

}  // namespace detail

/// Homology with explicit generators and a projection from cycles to coordinates.
/// Generator order per slot is the canonical one of FgAbelianGroup.
class Homology {
 public:
  explicit Homology(ComplexPtr c) : complex_(std::move(c)), red_(*complex_) {
    const int N = complex_->period();
    slots_.resize(N);
    for (int n = 0; n < N; ++n) {
      auto& s = slots_[n];
      for (std::size_t j = 0; j < complex_->rank(n); ++j) {
        const auto g = static_cast<std::uint32_t>(complex_->offset(n) + j);
        if (red_.alive(g)) {
          s.local.emplace(g, s.ids.size());
          s.ids.push_back(g);
        }
      }
    }
    std::vector<FgAbelianGroup> groups;
    for (int n = 0; n < N; ++n) groups.push_back(build_slot(n));
    module_ = GradedModule(N, std::move(groups));
  }

  explicit Homology(const PeriodicComplex& c) : Homology(share(c)) {}

  const PeriodicComplex& complex() const { return *complex_; }
  const ComplexPtr& complex_ptr() const { return complex_; }
  const GradedModule& module() const { return module_; }
  const FgAbelianGroup& group(long long n) const { return module_.group(n); }
  Presentation presentation(long long n) const { return module_.presentation(n); }

  /// Representative cycles, in slot-local coordinates.
  const std::vector<SparseVec>& generators(long long n) const { return slots_[slot_mod(n, period())].gens; }

  int period() const { return complex_->period(); }

  bool is_cycle(long long n, const SparseVec& z) const { return complex_->d(n).apply(z).empty(); }

  /// Canonical coordinates of the class of cycle z; torsion entries reduced to [0, order).
  std::vector<Integer> coordinates(long long n, const SparseVec& z) const {
    const int k = slot_mod(n, period());
    require(is_cycle(k, z), ErrorKind::shape_mismatch, "coordinates requested for a non-cycle");
    const auto& s = slots_[k];
    std::map<std::uint32_t, Integer> v;
    for (const auto& [i, x] : z) v.emplace(static_cast<std::uint32_t>(complex_->offset(k) + i), x);
    v = red_.project(std::move(v));
    std::vector<Integer> res(s.ids.size());
    for (const auto& [g, x] : v) res[s.local.at(g)] = x;
    std::vector<Integer> c = s.vinv.apply(res);
    std::vector<Integer> kc(c.begin() + static_cast<std::ptrdiff_t>(s.r), c.end());
    std::vector<Integer> q = s.u2.apply(kc);
    std::vector<Integer> out;
    for (std::size_t t = 0; t < s.canon.size(); ++t) {
      const std::size_t l = s.canon[t];
      const Integer ord = group(k).order(t);
      out.push_back(ord == 0 ? q[l] : exactlin::mod_floor(q[l], ord));
    }
    return out;
  }

  bool is_boundary(long long n, const SparseVec& z) const {
    for (const auto& x : coordinates(n, z))
      if (x != 0) return false;
    return true;
  }

 private:
  struct Slot {
    std::vector<std::uint32_t> ids;
    std::map<std::uint32_t, std::size_t> local;
    IntMatrix vinv, u2;
    std::size_t r = 0;
    std::vector<std::size_t> canon;  // canonical generator -> column of u2^-1
    std::vector<SparseVec> gens;
  };

  // Residual differential out of slot n as a dense matrix.
  IntMatrix residual_d(int n) const {
    const auto& src = slots_[n];
    const auto& dst = slots_[slot_mod(n - 1, period())];
    IntMatrix m(dst.ids.size(), src.ids.size());
    for (std::size_t j = 0; j < src.ids.size(); ++j)
      for (const auto& [g, x] : red_.column(src.ids[j])) m(dst.local.at(g), j) = x;
    return m;
  }

  FgAbelianGroup build_slot(int n) {
    auto& s = slots_[n];
    const IntMatrix a = residual_d(n);
    const IntMatrix b = residual_d(slot_mod(n + 1, period()));
    const auto sa = exactlin::smith_normal_form(a);
    s.r = sa.rank();
    s.vinv = sa.v_inv;
    const std::size_t k = s.ids.size() - s.r;
    const IntMatrix kern = sa.v.cols_range(s.r, k);
    const IntMatrix x = (sa.v_inv * b).rows_range(s.r, k);
    const auto sx = exactlin::smith_normal_form(x);
    s.u2 = sx.u;
    std::vector<Integer> tors;
    for (std::size_t l = 0; l < sx.rank(); ++l)
      if (sx.diagonal[l] > 1) s.canon.push_back(l), tors.push_back(sx.diagonal[l]);
    for (std::size_t l = sx.rank(); l < k; ++l) s.canon.push_back(l);
    const IntMatrix reps = kern * sx.u_inv;
    for (std::size_t l : s.canon) {
      SparseVec global;
      for (std::size_t i = 0; i < s.ids.size(); ++i)
        if (reps(i, l) != 0) global = exactlin::axpy(global, reps(i, l), red_.lift(s.ids[i]));
      SparseVec loc;
      for (const auto& [g, y] : global)
        loc.emplace_back(static_cast<std::uint32_t>(g - complex_->offset(n)), y);
      s.gens.push_back(std::move(loc));
    }
    return FgAbelianGroup(k - sx.rank(), tors);
  }

  ComplexPtr complex_;
  detail::UnitReduction red_;
  std::vector<Slot> slots_;
  GradedModule module_;
};

inline GradedModule homology(const PeriodicComplex& c) { return Homology(c).module(); }

/// H(f) on canonical generators.
inline GradedMap induced_map(const ChainMap& f, const Homology& hs, const Homology& ht) {
  require(hs.complex() == f.source() && ht.complex() == f.target(), ErrorKind::shape_mismatch,
          "homology data does not match the map endpoints");
  const int N = f.period();
  std::vector<Presentation> src, tgt;
  std::vector<IntMatrix> comps;
  for (int n = 0; n < N; ++n) {
    src.push_back(hs.presentation(n));
    tgt.push_back(ht.presentation(n));
    const auto& gens = hs.generators(n);
    IntMatrix m(ht.group(n).num_generators(), gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
      auto c = ht.coordinates(n, f.block(n).apply(gens[j]));
      for (std::size_t i = 0; i < c.size(); ++i) m(i, j) = c[i];
    }
    comps.push_back(std::move(m));
  }
  return GradedMap(N, 0, std::move(src), std::move(tgt), std::move(comps));
}

inline GradedMap induced_map(const ChainMap& f) {
  return induced_map(f, Homology(f.source_ptr()), Homology(f.target_ptr()));
}

}  // namespace franke::percomplex
