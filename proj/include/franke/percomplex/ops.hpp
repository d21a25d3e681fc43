#pragma once

#include "franke/percomplex/homology.hpp"

#include <utility>
#include <vector>

namespace franke::percomplex {

/// X[k]: slot n holds X_{n-k}; differentials pick up (-1)^k.
inline PeriodicComplex shift(const PeriodicComplex& x, long long k) {
  const int N = x.period();
  std::vector<std::size_t> ranks(N);
  std::vector<SparseMatrix> d(N);
  for (int n = 0; n < N; ++n) {
    ranks[n] = x.rank(n - k);
    d[n] = x.d(n - k).scaled(exactlin::parity_sign(k));
  }
  return PeriodicComplex(N, std::move(ranks), std::move(d));
}

inline ChainMap shift(const ChainMap& f, long long k) {
  std::vector<SparseMatrix> b;
  for (int n = 0; n < f.period(); ++n) b.push_back(f.block(n - k));
  return ChainMap(share(shift(f.source(), k)), share(shift(f.target(), k)), std::move(b), false);
}

/// Mapping cone with its structure maps; slot n is Y_n + X_{n-1}.
struct Cone {
  ComplexPtr complex;
  ChainMap incl;       // Y -> cone
  ChainMap bdry;       // cone -> X[1]
  ChainHomotopy null;  // d h + h d = incl after f
};

inline Cone cone(const ChainMap& f) {
  const auto& X = f.source();
  const auto& Y = f.target();
  const int N = f.period();
  std::vector<std::size_t> ranks(N);
  for (int n = 0; n < N; ++n) ranks[n] = Y.rank(n) + X.rank(n - 1);
  std::vector<SparseMatrix> d;
  for (int n = 0; n < N; ++n) {
    SparseMatrix m(ranks[slot_mod(n - 1, N)], ranks[n]);
    Y.d(n).paste_into(m, 0, 0);
    f.block(n - 1).paste_into(m, 0, Y.rank(n));
    X.d(n - 1).paste_into(m, Y.rank(n - 1), Y.rank(n), -1);
    d.push_back(std::move(m));
  }
  Cone c;
  c.complex = share(PeriodicComplex(N, ranks, std::move(d)));
  const ComplexPtr x1 = share(shift(X, 1));
  std::vector<SparseMatrix> inc, bd, h;
  for (int n = 0; n < N; ++n) {
    SparseMatrix i(ranks[n], Y.rank(n));
    SparseMatrix::identity(Y.rank(n)).paste_into(i, 0, 0);
    inc.push_back(std::move(i));
    SparseMatrix b(X.rank(n - 1), ranks[n]);
    SparseMatrix::identity(X.rank(n - 1)).paste_into(b, 0, Y.rank(n));
    bd.push_back(std::move(b));
    SparseMatrix hn(ranks[slot_mod(n + 1, N)], X.rank(n));
    SparseMatrix::identity(X.rank(n)).paste_into(hn, Y.rank(n + 1), 0);
    h.push_back(std::move(hn));
  }
  c.incl = ChainMap(f.target_ptr(), c.complex, std::move(inc));
  c.bdry = ChainMap(c.complex, x1, std::move(bd));
  c.null = ChainHomotopy{f.source_ptr(), c.complex, std::move(h)};
  return c;
}

/// Sign of the Koszul rule for a left factor sitting in slot i (representative in [0, N)).
inline int koszul_sign(int i) { return exactlin::parity_sign(i); }

/// Index layout of a tensor product: slot n is the concatenation over i of X_i (x) Y_{n-i}.
struct TensorLayout {
  int period = 1;
  std::vector<std::size_t> xr, yr;
  // offset of block (i, j = n - i) inside slot n = i + j
  std::size_t block_offset(int i, int j) const {
    const int n = slot_mod(i + j, period);
    std::size_t off = 0;
    for (int a = 0; a < i; ++a) off += xr[a] * yr[slot_mod(n - a, period)];
    return off;
  }
  std::size_t index(int i, std::size_t x, int j, std::size_t y) const {
    return block_offset(i, j) + x * yr[slot_mod(j, period)] + y;
  }
  std::size_t rank(int n) const {
    std::size_t r = 0;
    for (int a = 0; a < period; ++a) r += xr[a] * yr[slot_mod(n - a, period)];
    return r;
  }
};

inline TensorLayout tensor_layout(const PeriodicComplex& x, const PeriodicComplex& y) {
  require(x.period() == y.period(), ErrorKind::period_mismatch, "tensor of different periods");
  return TensorLayout{x.period(), x.ranks(), y.ranks()};
}

/// d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy, with |x| read in [0, N).
/// For odd N the wrap-around breaks d^2 = 0 unless the differentials vanish; that case throws.
inline PeriodicComplex tensor(const PeriodicComplex& x, const PeriodicComplex& y) {
  const TensorLayout L = tensor_layout(x, y);
  const int N = L.period;
  std::vector<std::size_t> ranks(N);
  for (int n = 0; n < N; ++n) ranks[n] = L.rank(n);
  std::vector<SparseMatrix> d;
  for (int n = 0; n < N; ++n) {
    SparseMatrix m(ranks[slot_mod(n - 1, N)], ranks[n]);
    for (int i = 0; i < N; ++i) {
      const int j = slot_mod(n - i, N);
      const std::size_t col0 = L.block_offset(i, j);
      const auto dx = exactlin::kronecker(x.d(i), SparseMatrix::identity(y.rank(j)));
      dx.paste_into(m, L.block_offset(slot_mod(i - 1, N), j), col0);
      const auto dy = exactlin::kronecker(SparseMatrix::identity(x.rank(i)), y.d(j));
      dy.paste_into(m, L.block_offset(i, slot_mod(j - 1, N)), col0, koszul_sign(i));
    }
    d.push_back(std::move(m));
  }
  return PeriodicComplex(N, std::move(ranks), std::move(d));
}

inline ChainMap tensor(const ChainMap& f, const ChainMap& g, ComplexPtr src = nullptr, ComplexPtr tgt = nullptr) {
  if (!src) src = share(tensor(f.source(), g.source()));
  if (!tgt) tgt = share(tensor(f.target(), g.target()));
  const TensorLayout Ls = tensor_layout(f.source(), g.source());
  const TensorLayout Lt = tensor_layout(f.target(), g.target());
  const int N = f.period();
  std::vector<SparseMatrix> b;
  for (int n = 0; n < N; ++n) {
    SparseMatrix m(tgt->rank(n), src->rank(n));
    for (int i = 0; i < N; ++i) {
      const int j = slot_mod(n - i, N);
      exactlin::kronecker(f.block(i), g.block(j)).paste_into(m, Lt.block_offset(i, j), Ls.block_offset(i, j));
    }
    b.push_back(std::move(m));
  }
  return ChainMap(std::move(src), std::move(tgt), std::move(b));
}

/// x (x) y for x in X_i and y in Y_j, as a vector of slot i + j.
inline SparseVec tensor_vectors(const TensorLayout& L, int i, const SparseVec& x, int j, const SparseVec& y) {
  SparseVec out;
  for (const auto& [a, u] : x)
    for (const auto& [b, v] : y)
      out.emplace_back(static_cast<std::uint32_t>(L.index(i, a, j, b)), u * v);
  std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  return out;
}

/// Direct sum of complexes, slotwise X_n + Y_n.
inline PeriodicComplex direct_sum(const PeriodicComplex& x, const PeriodicComplex& y) {
  require(x.period() == y.period(), ErrorKind::period_mismatch, "direct sum of different periods");
  const int N = x.period();
  std::vector<std::size_t> ranks(N);
  for (int n = 0; n < N; ++n) ranks[n] = x.rank(n) + y.rank(n);
  std::vector<SparseMatrix> d;
  for (int n = 0; n < N; ++n) {
    SparseMatrix m(ranks[slot_mod(n - 1, N)], ranks[n]);
    x.d(n).paste_into(m, 0, 0);
    y.d(n).paste_into(m, x.rank(n - 1), x.rank(n));
    d.push_back(std::move(m));
  }
  return PeriodicComplex(N, std::move(ranks), std::move(d));
}

/// H(X) (x) H(Y) -> H(X (x) Y) on the tensor presentation of canonical generators.
inline GradedMap kunneth_map(const Homology& hx, const Homology& hy, const Homology& hxy) {
  const auto& X = hx.complex();
  const auto& Y = hy.complex();
  const TensorLayout L = tensor_layout(X, Y);
  const int N = L.period;
  require(hxy.complex().ranks() == std::vector<std::size_t>([&] {
            std::vector<std::size_t> r(N);
            for (int n = 0; n < N; ++n) r[n] = L.rank(n);
            return r;
          }()),
          ErrorKind::shape_mismatch, "third complex is not the tensor product");
  std::vector<Presentation> src(N), tgt(N);
  std::vector<IntMatrix> comps(N);
  for (int n = 0; n < N; ++n) {
    tgt[n] = hxy.presentation(n);
    std::vector<std::vector<Integer>> cols;
    Presentation p;
    for (int i = 0; i < N; ++i) {
      const int j = slot_mod(n - i, N);
      const Presentation pij = exactlin::tensor(hx.presentation(i), hy.presentation(j));
      p = exactlin::direct_sum(p, pij);
      for (const auto& gx : hx.generators(i))
        for (const auto& gy : hy.generators(j))
          cols.push_back(hxy.coordinates(n, tensor_vectors(L, i, gx, j, gy)));
    }
    src[n] = std::move(p);
    comps[n] = exactlin::from_columns(tgt[n].generators, cols);
  }
  return GradedMap(N, 0, std::move(src), std::move(tgt), std::move(comps));
}

inline GradedMap kunneth_map(const PeriodicComplex& x, const PeriodicComplex& y) {
  const ComplexPtr xy = share(tensor(x, y));
  return kunneth_map(Homology(x), Homology(y), Homology(xy));
}

/// Graded groups agree slot by slot and the homology agrees.
inline bool slotwise_isomorphic(const PeriodicComplex& a, const PeriodicComplex& b) {
  return a.period() == b.period() && a.ranks() == b.ranks() && homology(a) == homology(b);
}

}  // namespace franke::percomplex
