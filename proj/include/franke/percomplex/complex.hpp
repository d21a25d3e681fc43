#pragma once

#include "franke/exactlin.hpp"

#include <memory>
#include <string>
#include <vector>

namespace franke::percomplex {

using exactlin::FgAbelianGroup;
using exactlin::IntMatrix;
using exactlin::Integer;
using exactlin::SparseMatrix;
using exactlin::SparseVec;

/// Slot index in [0, period).
inline int slot_mod(long long n, int period) {
  long long r = n % period;
  return static_cast<int>(r < 0 ? r + period : r);
}

/// Z/N-graded chain complex of free abelian groups; d_n maps slot n to slot n-1.
class PeriodicComplex {
 public:
  PeriodicComplex() = default;

  PeriodicComplex(int period, std::vector<std::size_t> ranks, std::vector<SparseMatrix> diffs)
      : period_(period), ranks_(std::move(ranks)), diffs_(std::move(diffs)) {
    require(period_ >= 1, ErrorKind::period_mismatch, "period must be positive");
    require(ranks_.size() == static_cast<std::size_t>(period_) && diffs_.size() == ranks_.size(),
            ErrorKind::shape_mismatch, "need one rank and one differential per slot");
    for (int n = 0; n < period_; ++n) {
      const auto& d = diffs_[n];
      require(d.cols() == rank(n) && d.rows() == rank(n - 1), ErrorKind::shape_mismatch,
              "differential " + std::to_string(n) + " has wrong shape");
    }
    for (int n = 0; n < period_; ++n)
      require((d(n - 1) * d(n)).is_zero(), ErrorKind::differential_not_square_zero,
              "d_" + std::to_string(slot_mod(n - 1, period_)) + " d_" + std::to_string(n) + " != 0");
    offsets_.assign(period_ + 1, 0);
    for (int n = 0; n < period_; ++n) offsets_[n + 1] = offsets_[n] + ranks_[n];
  }

  static PeriodicComplex from_dense(int period, const std::vector<std::size_t>& ranks,
                                    const std::vector<IntMatrix>& diffs) {
    std::vector<SparseMatrix> s;
    for (const auto& m : diffs) s.push_back(SparseMatrix::from_dense(m));
    return PeriodicComplex(period, ranks, std::move(s));
  }

  static PeriodicComplex zero(int period) { return concentrated(period, 0, 0); }

  /// Z^rank placed in one slot with zero differential.
  static PeriodicComplex concentrated(int period, int slot, std::size_t rank) {
    std::vector<std::size_t> ranks(period, 0);
    ranks[slot_mod(slot, period)] = rank;
    return with_zero_differential(period, ranks);
  }

  static PeriodicComplex with_zero_differential(int period, const std::vector<std::size_t>& ranks) {
    std::vector<SparseMatrix> d;
    for (int n = 0; n < period; ++n) d.emplace_back(ranks[slot_mod(n - 1, period)], ranks[n]);
    return PeriodicComplex(period, ranks, std::move(d));
  }

  /// Z in slot s mapping identically onto Z in slot s-1 (requires period >= 2).
  static PeriodicComplex disk(int period, int s) {
    require(period >= 2, ErrorKind::period_mismatch, "a disk needs two distinct slots");
    std::vector<std::size_t> ranks(period, 0);
    ranks[slot_mod(s, period)] = 1;
    ranks[slot_mod(s - 1, period)] = 1;
    std::vector<SparseMatrix> d;
    for (int n = 0; n < period; ++n) d.emplace_back(ranks[slot_mod(n - 1, period)], ranks[n]);
    d[slot_mod(s, period)].add(0, 0, 1);
    return PeriodicComplex(period, ranks, std::move(d));
  }

  int period() const { return period_; }
  std::size_t rank(long long n) const { return ranks_[slot_mod(n, period_)]; }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  const SparseMatrix& d(long long n) const { return diffs_[slot_mod(n, period_)]; }

  std::size_t total_rank() const { return offsets_.empty() ? 0 : offsets_.back(); }
  /// Position of slot n inside the concatenation of all slots.
  std::size_t offset(long long n) const { return offsets_[slot_mod(n, period_)]; }

  friend bool operator==(const PeriodicComplex& a, const PeriodicComplex& b) {
    return a.period_ == b.period_ && a.ranks_ == b.ranks_ && a.diffs_ == b.diffs_;
  }

 private:
  int period_ = 1;
  std::vector<std::size_t> ranks_{0};
  std::vector<SparseMatrix> diffs_{SparseMatrix(0, 0)};
  std::vector<std::size_t> offsets_{0, 0};
};

using ComplexPtr = std::shared_ptr<const PeriodicComplex>;

inline ComplexPtr share(PeriodicComplex c) { return std::make_shared<const PeriodicComplex>(std::move(c)); }

/// Degree-preserving map; blocks[n] sends slot n of source to slot n of target.
class ChainMap {
 public:
  ChainMap() = default;

  ChainMap(ComplexPtr source, ComplexPtr target, std::vector<SparseMatrix> blocks, bool validate = true)
      : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)) {
    require(source_ && target_, ErrorKind::shape_mismatch, "chain map endpoints missing");
    const int N = source_->period();
    require(target_->period() == N, ErrorKind::period_mismatch, "chain map between different periods");
    require(blocks_.size() == static_cast<std::size_t>(N), ErrorKind::shape_mismatch, "one block per slot");
    for (int n = 0; n < N; ++n)
      require(blocks_[n].rows() == target_->rank(n) && blocks_[n].cols() == source_->rank(n),
              ErrorKind::shape_mismatch, "chain map block " + std::to_string(n) + " has wrong shape");
    if (validate)
      for (int n = 0; n < N; ++n)
        require(block(n - 1) * source_->d(n) == target_->d(n) * block(n), ErrorKind::not_a_chain_map,
                "f d != d f at slot " + std::to_string(n));
  }

  static ChainMap zero(ComplexPtr s, ComplexPtr t) {
    std::vector<SparseMatrix> b;
    for (int n = 0; n < s->period(); ++n) b.emplace_back(t->rank(n), s->rank(n));
    return ChainMap(std::move(s), std::move(t), std::move(b), false);
  }

  static ChainMap identity(ComplexPtr c) {
    std::vector<SparseMatrix> b;
    for (int n = 0; n < c->period(); ++n) b.push_back(SparseMatrix::identity(c->rank(n)));
    return ChainMap(c, c, std::move(b), false);
  }

  const PeriodicComplex& source() const { return *source_; }
  const PeriodicComplex& target() const { return *target_; }
  const ComplexPtr& source_ptr() const { return source_; }
  const ComplexPtr& target_ptr() const { return target_; }
  int period() const { return source_->period(); }
  const SparseMatrix& block(long long n) const { return blocks_[slot_mod(n, period())]; }
  const std::vector<SparseMatrix>& blocks() const { return blocks_; }

  bool is_zero() const {
    for (const auto& b : blocks_)
      if (!b.is_zero()) return false;
    return true;
  }

  bool same_blocks(const ChainMap& o) const { return blocks_ == o.blocks_; }

 private:
  ComplexPtr source_, target_;
  std::vector<SparseMatrix> blocks_;
};

/// g after f.
inline ChainMap compose(const ChainMap& g, const ChainMap& f) {
  require(f.target_ptr() == g.source_ptr() || f.target() == g.source(), ErrorKind::shape_mismatch,
          "composing maps with mismatched endpoints");
  std::vector<SparseMatrix> b;
  for (int n = 0; n < f.period(); ++n) b.push_back(g.block(n) * f.block(n));
  return ChainMap(f.source_ptr(), g.target_ptr(), std::move(b), false);
}

inline ChainMap add(const ChainMap& f, const ChainMap& g, const Integer& scale_g = 1) {
  require((f.source_ptr() == g.source_ptr() || f.source() == g.source()) &&
              (f.target_ptr() == g.target_ptr() || f.target() == g.target()),
          ErrorKind::shape_mismatch, "adding maps with different endpoints");
  std::vector<SparseMatrix> b;
  for (int n = 0; n < f.period(); ++n) b.push_back(f.block(n) + g.block(n).scaled(scale_g));
  return ChainMap(f.source_ptr(), f.target_ptr(), std::move(b), false);
}

/// Degree +1 map; blocks[n] sends slot n of source to slot n+1 of target.
struct ChainHomotopy {
  ComplexPtr source, target;
  std::vector<SparseMatrix> blocks;

  const SparseMatrix& block(long long n) const { return blocks[slot_mod(n, source->period())]; }

  /// d h + h d as a chain map.
  ChainMap boundary() const {
    std::vector<SparseMatrix> b;
    for (int n = 0; n < source->period(); ++n)
      b.push_back(target->d(n + 1) * block(n) + block(n - 1) * source->d(n));
    return ChainMap(source, target, std::move(b), false);
  }
};

}  // namespace franke::percomplex
