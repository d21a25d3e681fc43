#pragma once

#include "franke/realization/crowned.hpp"
#include "franke/verify/random.hpp"

#include <vector>

namespace franke::verify {

using exactlin::IntMatrix;
using exactlin::Integer;
using exactlin::SparseMatrix;
using percomplex::ChainMap;
using percomplex::ComplexPtr;
using percomplex::PeriodicComplex;
using percomplex::slot_mod;
using realization::CrownedDiagram;

inline IntMatrix random_matrix(SplitMix64& rng, std::size_t r, std::size_t c, int max_entry) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.uniform(-max_entry, max_entry);
  return m;
}

/// Random unimodular matrix and its inverse, as a product of elementary operations.
inline std::pair<IntMatrix, IntMatrix> random_unimodular(SplitMix64& rng, std::size_t n, int steps, int max_entry) {
  IntMatrix p = IntMatrix::identity(n), q = IntMatrix::identity(n);
  if (n < 2) return {p, q};
  for (int s = 0; s < steps; ++s) {
    const auto a = static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(n) - 1));
    auto b = static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(n) - 2));
    if (b >= a) ++b;
    const Integer x = rng.uniform(-max_entry, max_entry);
    p.add_row(a, b, x);   // p <- E p
    q.add_col(b, a, -x);  // q <- q E^-1
  }
  return {p, q};
}

/// Degreewise free twisted complex with d^2 = 0. Slot ranks are drawn in [0, max_rank]; d_1 is free,
/// each later d_n is a random combination of the kernel of d_{n-1}, and d_0 additionally kills the
/// image of d_1 by factoring through the left kernel.
inline PeriodicComplex generate_twisted(std::uint64_t seed, int N, int max_rank, int max_entry) {
  SplitMix64 rng(seed);
  std::vector<std::size_t> ranks(N);
  for (auto& r : ranks) r = static_cast<std::size_t>(rng.uniform(0, max_rank));
  std::vector<IntMatrix> d(N);
  auto rk = [&](long long n) { return ranks[slot_mod(n, N)]; };
  if (N == 1) {
    d[0] = IntMatrix(rk(0), rk(0));
    return PeriodicComplex::from_dense(N, ranks, d);
  }
  d[slot_mod(1, N)] = random_matrix(rng, rk(0), rk(1), max_entry);
  for (int n = 2; n < N; ++n) {
    const IntMatrix k = exactlin::kernel_basis(d[n - 1]);  // columns spanning ker d_{n-1} in slot n-1
    d[n] = k * random_matrix(rng, k.cols(), rk(n), max_entry);
  }
  // d_0 : slot 0 -> slot N-1 must satisfy d_{N-1} d_0 = 0 and d_0 d_1 = 0
  const IntMatrix k = exactlin::kernel_basis(d[slot_mod(N - 1, N)]);
  const IntMatrix lk = exactlin::kernel_basis(d[1].transpose()).transpose();  // rows spanning the left kernel of d_1
  d[0] = k * random_matrix(rng, k.cols(), lk.rows(), max_entry) * lk;
  return PeriodicComplex::from_dense(N, ranks, d);
}

/// Everything needed to rebuild a random crowned diagram in L; shrinking edits these fields.
struct CrownedRecipe {
  int period = 2;
  std::vector<IntMatrix> lambda;         // z_i x b_i, full column rank
  std::vector<std::vector<int>> disks;   // per crown element: top slots of contractible disk summands
  std::uint64_t seed = 0;                // homotopies and basis changes
  int max_entry = 2;
  bool homotopies = true;
  bool basis_change = true;
};

namespace detail {

// Spheres Z^r in `slot` followed by the disk summands.
inline PeriodicComplex sphere_plus_disks(int N, int slot, std::size_t r, const std::vector<int>& tops) {
  std::vector<std::size_t> ranks(N, 0);
  ranks[slot_mod(slot, N)] = r;
  for (int t : tops) {
    ++ranks[slot_mod(t, N)];
    ++ranks[slot_mod(t - 1, N)];
  }
  std::vector<std::size_t> fill(ranks.size(), 0);
  fill[slot_mod(slot, N)] = r;
  std::vector<SparseMatrix> d;
  for (int n = 0; n < N; ++n) d.emplace_back(ranks[slot_mod(n - 1, N)], ranks[n]);
  for (int t : tops) {
    const int top = slot_mod(t, N), bot = slot_mod(t - 1, N);
    d[top].add(fill[bot], fill[top], 1);
    ++fill[top];
    ++fill[bot];
  }
  return PeriodicComplex(N, ranks, std::move(d));
}

}  // namespace detail

inline CrownedDiagram build_crowned(const CrownedRecipe& r) {
  const int N = r.period;
  const posetkit::CrownIndex ci{N};
  SplitMix64 rng(r.seed);
  std::vector<PeriodicComplex> raw(2 * N);
  for (int i = 0; i < N; ++i) {
    raw[ci.beta(i)] = detail::sphere_plus_disks(N, i, r.lambda[i].cols(), r.disks[ci.beta(i)]);
    raw[ci.zeta(i)] = detail::sphere_plus_disks(N, i, r.lambda[i].rows(), r.disks[ci.zeta(i)]);
  }
  // basis changes P_v per vertex and slot: d' = P d P^-1
  std::vector<std::vector<std::pair<IntMatrix, IntMatrix>>> bc(2 * N);
  std::vector<ComplexPtr> verts(2 * N);
  for (std::size_t v = 0; v < raw.size(); ++v) {
    SplitMix64 vr = rng.fork(v);
    for (int n = 0; n < N; ++n)
      bc[v].push_back(r.basis_change ? random_unimodular(vr, raw[v].rank(n), 3, r.max_entry)
                                     : std::pair{IntMatrix::identity(raw[v].rank(n)), IntMatrix::identity(raw[v].rank(n))});
    std::vector<IntMatrix> d;
    for (int n = 0; n < N; ++n) d.push_back(bc[v][slot_mod(n - 1, N)].first * raw[v].d(n).to_dense() * bc[v][n].second);
    verts[v] = percomplex::share(PeriodicComplex::from_dense(N, raw[v].ranks(), d));
  }
  // f = f0 + d h + h d on the raw complexes, then conjugated
  auto edge = [&](std::size_t a, std::size_t b, const IntMatrix* lam, int slot, std::uint64_t tag) {
    SplitMix64 er = rng.fork(1000 + tag);
    const auto& A = raw[a];
    const auto& B = raw[b];
    std::vector<IntMatrix> f(N), h(N);
    for (int n = 0; n < N; ++n) {
      f[n] = IntMatrix(B.rank(n), A.rank(n));
      h[n] = r.homotopies ? random_matrix(er, B.rank(n + 1), A.rank(n), 1) : IntMatrix(B.rank(n + 1), A.rank(n));
    }
    if (lam) f[slot_mod(slot, N)].set_block(0, 0, *lam);
    std::vector<SparseMatrix> blocks;
    for (int n = 0; n < N; ++n) {
      const IntMatrix g = f[n] + B.d(n + 1).to_dense() * h[n] + h[slot_mod(n - 1, N)] * A.d(n).to_dense();
      blocks.push_back(SparseMatrix::from_dense(bc[b][n].first * g * bc[a][n].second));
    }
    return ChainMap(verts[a], verts[b], std::move(blocks));
  };
  std::vector<ComplexPtr> betas, zetas;
  std::vector<ChainMap> ls, ks;
  for (int i = 0; i < N; ++i) {
    betas.push_back(verts[ci.beta(i)]);
    zetas.push_back(verts[ci.zeta(i)]);
  }
  for (int i = 0; i < N; ++i) {
    ls.push_back(edge(ci.beta(i), ci.zeta(i), &r.lambda[i], i, 2 * i));
    ks.push_back(edge(ci.beta(i - 1), ci.zeta(i), nullptr, i, 2 * i + 1));
  }
  return realization::make_crowned(N, betas, zetas, ls, ks);
}

/// Random recipe: sphere ranks in [0, max_rank], injective lambda, occasional disks.
/// With `split`, lambda has free cokernel.
inline CrownedRecipe random_recipe(SplitMix64& rng, int N, int max_rank, int max_entry, bool split = false) {
  CrownedRecipe r;
  r.period = N;
  r.max_entry = max_entry;
  r.seed = rng.next();
  r.disks.assign(2 * N, {});
  for (int i = 0; i < N; ++i) {
    const auto z = static_cast<std::size_t>(rng.uniform(0, max_rank));
    const auto b = static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(z)));
    IntMatrix lam;
    if (split) {
      lam = random_unimodular(rng, z, 4, max_entry).first.cols_range(0, b);
    } else {
      do lam = random_matrix(rng, z, b, max_entry);
      while (exactlin::rank(lam) < b);
    }
    r.lambda.push_back(std::move(lam));
  }
  for (auto& d : r.disks)
    if (rng.chance(1, 4)) d.push_back(static_cast<int>(rng.uniform(0, N - 1)));
  return r;
}

/// Chain map X -> X (+) Z given by c on X, perturbed by a null-homotopic term.
inline ChainMap random_chain_map(SplitMix64& rng, int N, int max_rank, int max_entry) {
  const PeriodicComplex X = generate_twisted(rng.next(), N, max_rank, max_entry);
  const PeriodicComplex Z = generate_twisted(rng.next(), N, max_rank, max_entry);
  const ComplexPtr src = percomplex::share(X);
  const ComplexPtr tgt = percomplex::share(percomplex::direct_sum(X, Z));
  const Integer c = rng.uniform(-max_entry, max_entry);
  std::vector<IntMatrix> h(N);
  for (int n = 0; n < N; ++n) h[n] = random_matrix(rng, tgt->rank(n + 1), X.rank(n), 1);
  std::vector<SparseMatrix> blocks;
  for (int n = 0; n < N; ++n) {
    IntMatrix f(tgt->rank(n), X.rank(n));
    for (std::size_t a = 0; a < X.rank(n); ++a) f(a, a) = c;
    f = f + tgt->d(n + 1).to_dense() * h[n] + h[slot_mod(n - 1, N)] * X.d(n).to_dense();
    blocks.push_back(SparseMatrix::from_dense(f));
  }
  return ChainMap(src, tgt, std::move(blocks));
}

/// Injective map Z^a -> Z^b (a <= b) between one-slot complexes in slot 0.
inline ChainMap random_mono(SplitMix64& rng, int N, int max_rank, int max_entry) {
  const auto b = static_cast<std::size_t>(rng.uniform(1, max_rank));
  const auto a = static_cast<std::size_t>(rng.uniform(1, static_cast<long long>(b)));
  IntMatrix m;
  do m = random_matrix(rng, b, a, max_entry);
  while (exactlin::rank(m) < a);
  const ComplexPtr s = percomplex::share(PeriodicComplex::concentrated(N, 0, a));
  const ComplexPtr t = percomplex::share(PeriodicComplex::concentrated(N, 0, b));
  std::vector<SparseMatrix> blocks;
  for (int n = 0; n < N; ++n) blocks.push_back(n == 0 ? SparseMatrix::from_dense(m) : SparseMatrix(t->rank(n), s->rank(n)));
  return ChainMap(s, t, std::move(blocks));
}

}  // namespace franke::verify
