#pragma once

#include "franke/diagramkit/diagram.hpp"

namespace franke::diagramkit {

using exactlin::SparseMatrix;
using exactlin::SparseVec;
using percomplex::slot_mod;
using posetkit::Chain;

/// Normalized bar complex of a diagram; its totalization is the homotopy colimit.
/// Generator (chain i_0 < ... < i_p, x in D(i_0) slot m) sits in total slot m + p.
/// d = sum_k (-1)^k d_k + (-1)^p d_internal, where d_0 applies D(i_0 -> i_1).
class BarComplex {
 public:
  BarComplex() = default;

  explicit BarComplex(const ComplexDiagram& D) : shape_(D.shape_ptr()), period_(D.period()) {
    const auto& P = D.shape();
    const int N = period_;
    const int h = P.height();
    for (int p = 0; p <= h; ++p)
      for (auto& c : P.chains(static_cast<std::size_t>(p))) {
        chain_id_.emplace(c, chains_.size());
        chains_.push_back(std::move(c));
      }
    std::vector<std::size_t> ranks(N, 0);
    offset_.assign(chains_.size(), std::vector<std::size_t>(N, 0));
    for (std::size_t c = 0; c < chains_.size(); ++c) {
      const int p = degree(c);
      const auto& V = D.vertex(chains_[c][0]);
      for (int m = 0; m < N; ++m) {
        const int t = slot_mod(m + p, N);
        offset_[c][m] = ranks[t];
        ranks[t] += V.rank(m);
      }
    }
    std::vector<SparseMatrix> d;
    for (int t = 0; t < N; ++t) d.emplace_back(ranks[slot_mod(t - 1, N)], ranks[t]);
    for (std::size_t c = 0; c < chains_.size(); ++c) {
      const Chain& s = chains_[c];
      const int p = degree(c);
      const auto& V = D.vertex(s[0]);
      for (int m = 0; m < N; ++m) {
        const int t = slot_mod(m + p, N);
        auto& dt = d[t];
        for (std::size_t e = 0; e < V.rank(m); ++e) {
          const std::size_t col = offset_[c][m] + e;
          for (int k = 0; k <= p && p > 0; ++k) {
            Chain f = s;
            f.erase(f.begin() + k);
            const std::size_t fc = chain_id_.at(f);
            if (k == 0) {
              for (const auto& [i, x] : D.map(s[0], s[1]).block(m).column(e)) dt.add(offset_[fc][m] + i, col, x);
            } else {
              dt.add(offset_[fc][m] + e, col, exactlin::parity_sign(k));
            }
          }
          for (const auto& [i, x] : V.d(m).column(e)) dt.add(offset_[c][slot_mod(m - 1, N)] + i, col, exactlin::parity_sign(p) * x);
        }
      }
    }
    complex_ = percomplex::share(PeriodicComplex(N, std::move(ranks), std::move(d)));
  }

  const PeriodicComplex& complex() const { return *complex_; }
  const ComplexPtr& complex_ptr() const { return complex_; }
  const FinitePoset& shape() const { return *shape_; }
  int period() const { return period_; }

  const std::vector<Chain>& chains() const { return chains_; }
  int degree(std::size_t chain) const { return static_cast<int>(chains_[chain].size()) - 1; }
  std::optional<std::size_t> find_chain(const Chain& c) const {
    auto it = chain_id_.find(c);
    if (it == chain_id_.end()) return std::nullopt;
    return it->second;
  }

  /// Slot-local index of generator (chain, internal slot m, basis element e).
  std::size_t index(std::size_t chain, int m, std::size_t e) const { return offset_[chain][slot_mod(m, period_)] + e; }
  int total_slot(std::size_t chain, int m) const { return slot_mod(m + degree(chain), period_); }

 private:
  PosetPtr shape_;
  int period_ = 1;
  std::vector<Chain> chains_;
  std::map<Chain, std::size_t> chain_id_;
  std::vector<std::vector<std::size_t>> offset_;
  ComplexPtr complex_;
};

inline PeriodicComplex hocolim(const ComplexDiagram& D) { return BarComplex(D).complex(); }

/// Map of bar complexes induced by phi : I -> J, where src is the bar complex of phi^*D
/// and dst that of D. Chains whose image is degenerate go to zero.
inline ChainMap bar_map(const MonotoneMap& phi, const BarComplex& src, const ComplexDiagram& Dsrc,
                        const BarComplex& dst) {
  const int N = src.period();
  std::vector<SparseMatrix> blocks;
  for (int t = 0; t < N; ++t) blocks.emplace_back(dst.complex().rank(t), src.complex().rank(t));
  for (std::size_t c = 0; c < src.chains().size(); ++c) {
    Chain img;
    bool degenerate = false;
    for (std::size_t a : src.chains()[c]) {
      const std::size_t b = phi(a);
      if (!img.empty() && img.back() == b) degenerate = true;
      img.push_back(b);
    }
    if (degenerate) continue;
    const auto dc = dst.find_chain(img);
    require(dc.has_value(), ErrorKind::shape_mismatch, "image chain missing from target bar complex");
    const auto& V = Dsrc.vertex(src.chains()[c][0]);
    for (int m = 0; m < N; ++m)
      for (std::size_t e = 0; e < V.rank(m); ++e)
        blocks[src.total_slot(c, m)].add(dst.index(*dc, m, e), src.index(c, m, e), 1);
  }
  return ChainMap(src.complex_ptr(), dst.complex_ptr(), std::move(blocks));
}

/// Map of bar complexes induced by a natural transformation with components F[a] : D(a) -> D'(a).
inline ChainMap bar_map(const std::vector<ChainMap>& F, const BarComplex& src, const BarComplex& dst) {
  const int N = src.period();
  std::vector<SparseMatrix> blocks;
  for (int t = 0; t < N; ++t) blocks.emplace_back(dst.complex().rank(t), src.complex().rank(t));
  for (std::size_t c = 0; c < src.chains().size(); ++c) {
    const std::size_t a = src.chains()[c][0];
    const std::size_t dc = c;  // same shape, same chain order
    for (int m = 0; m < N; ++m)
      for (std::size_t e = 0; e < F[a].source().rank(m); ++e)
        for (const auto& [i, x] : F[a].block(m).column(e))
          blocks[src.total_slot(c, m)].add(dst.index(dc, m, i), src.index(c, m, e), x);
  }
  return ChainMap(src.complex_ptr(), dst.complex_ptr(), std::move(blocks));
}

/// hocolim D -> T from a cocone c[a] : D(a) -> T; only bar degree 0 contributes.
inline ChainMap augmentation(const BarComplex& bar, const std::vector<ChainMap>& cocone, ComplexPtr target) {
  const int N = bar.period();
  std::vector<SparseMatrix> blocks;
  for (int t = 0; t < N; ++t) blocks.emplace_back(target->rank(t), bar.complex().rank(t));
  for (std::size_t c = 0; c < bar.chains().size(); ++c) {
    if (bar.degree(c) != 0) continue;
    const std::size_t a = bar.chains()[c][0];
    for (int m = 0; m < N; ++m)
      for (std::size_t e = 0; e < cocone[a].source().rank(m); ++e)
        for (const auto& [i, x] : cocone[a].block(m).column(e)) blocks[m].add(i, bar.index(c, m, e), x);
  }
  return ChainMap(bar.complex_ptr(), std::move(target), std::move(blocks));
}

}  // namespace franke::diagramkit
