#pragma once

#include "franke/posetkit/poset.hpp"

namespace franke::posetkit {

/// [1] = {0 < 1}.
inline FinitePoset interval() { return FinitePoset({Label(Kind::point, 0), Label(Kind::point, 1)}, {{0, 1}}); }

/// [1] x [1]; (a, b) at index 2a + b.
inline FinitePoset square() { return product(interval(), interval()); }

/// The square without its top (1,1): the shape of a pushout.
inline FinitePoset corner() { return full_subposet(square(), {0, 1, 2}).poset; }

/// Indices of the crown C_N: beta_i at i, zeta_i at N + i.
struct CrownIndex {
  int period;
  std::size_t beta(long long i) const { return static_cast<std::size_t>(mod(i)); }
  std::size_t zeta(long long i) const { return static_cast<std::size_t>(period + mod(i)); }
  int mod(long long i) const {
    long long r = i % period;
    return static_cast<int>(r < 0 ? r + period : r);
  }
};

/// Indices of the double crown D_N: beta_i, gamma_i, zeta_i at i, N + i, 2N + i.
struct DoubleCrownIndex {
  int period;
  std::size_t beta(long long i) const { return static_cast<std::size_t>(mod(i)); }
  std::size_t gamma(long long i) const { return static_cast<std::size_t>(period + mod(i)); }
  std::size_t zeta(long long i) const { return static_cast<std::size_t>(2 * period + mod(i)); }
  int mod(long long i) const {
    long long r = i % period;
    return static_cast<int>(r < 0 ? r + period : r);
  }
};

/// C_N: beta_i < zeta_i and beta_i < zeta_{i+1}.
inline FinitePoset crown(int N) {
  require(N >= 1, ErrorKind::period_mismatch, "crown needs a positive period");
  CrownIndex ix{N};
  std::vector<Label> labels;
  for (int i = 0; i < N; ++i) labels.emplace_back(Kind::beta, i);
  for (int i = 0; i < N; ++i) labels.emplace_back(Kind::zeta, i);
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (int i = 0; i < N; ++i) {
    rel.emplace_back(ix.beta(i), ix.zeta(i));
    rel.emplace_back(ix.beta(i), ix.zeta(i + 1));
  }
  return FinitePoset(std::move(labels), rel);
}

/// D_N: beta_n <= gamma_n <= zeta_n, beta_n <= gamma_{n+1}, gamma_n <= zeta_{n+1}.
inline FinitePoset double_crown(int N) {
  require(N >= 1, ErrorKind::period_mismatch, "double crown needs a positive period");
  DoubleCrownIndex ix{N};
  std::vector<Label> labels;
  for (Kind k : {Kind::beta, Kind::gamma, Kind::zeta})
    for (int i = 0; i < N; ++i) labels.emplace_back(k, i);
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (int n = 0; n < N; ++n) {
    rel.emplace_back(ix.beta(n), ix.gamma(n));
    rel.emplace_back(ix.gamma(n), ix.zeta(n));
    rel.emplace_back(ix.beta(n), ix.gamma(n + 1));
    rel.emplace_back(ix.gamma(n), ix.zeta(n + 1));
  }
  return FinitePoset(std::move(labels), rel);
}

/// The shapes of the construction for one period, shared so diagrams can point at them.
struct CrownShapes {
  int period;
  PosetPtr c, cc, d;  // C_N, C_N x C_N, D_N
  MonotoneMap pr;     // C_N x C_N -> D_N
  MonotoneMap i;      // C_N -> D_N

  CrownIndex ci() const { return {period}; }
  DoubleCrownIndex di() const { return {period}; }
  /// Index of (x, y) in C_N x C_N.
  std::size_t pair(std::size_t x, std::size_t y) const { return x * c->size() + y; }
};

inline CrownShapes crown_shapes(int N) {
  CrownShapes s;
  s.period = N;
  s.c = share(crown(N));
  s.cc = share(product(*s.c, *s.c));
  s.d = share(double_crown(N));
  const CrownIndex ci{N};
  const DoubleCrownIndex di{N};
  auto is_beta = [&](std::size_t x) { return x < static_cast<std::size_t>(N); };
  auto idx = [&](std::size_t x) { return static_cast<long long>(x % N); };
  std::vector<std::size_t> img(s.cc->size());
  for (std::size_t x = 0; x < s.c->size(); ++x)
    for (std::size_t y = 0; y < s.c->size(); ++y) {
      const long long k = idx(x) + idx(y);
      std::size_t t;
      if (is_beta(x) && is_beta(y)) t = di.beta(k);
      else if (!is_beta(x) && !is_beta(y)) t = di.zeta(k);
      else t = di.gamma(k);
      img[s.pair(x, y)] = t;
    }
  s.pr = MonotoneMap(s.cc, s.d, std::move(img));
  std::vector<std::size_t> iimg(s.c->size());
  for (int n = 0; n < N; ++n) {
    iimg[ci.zeta(n)] = di.zeta(n);
    iimg[ci.beta(n)] = di.gamma(n);
  }
  s.i = MonotoneMap(s.c, s.d, std::move(iimg));
  return s;
}

/// J_n inside pr/zeta_n together with theta (the inclusion) and its left adjoint L.
struct ZigZag {
  SubPoset slice;    // pr / zeta_n, embedded in C_N x C_N
  SubPoset j;        // J_n, embedded in the slice
  MonotoneMap theta; // J_n -> slice
  std::optional<MonotoneMap> retraction;  // L : slice -> J_n, absent when not well defined
  std::string note;
};

inline ZigZag zigzag(const CrownShapes& s, long long n) {
  const int N = s.period;
  const CrownIndex ci{N};
  ZigZag z;
  z.slice = slice_over(s.pr, s.di().zeta(n));
  const auto& P = z.slice.poset;
  auto in_j = [&](std::size_t local) {
    const std::size_t g = z.slice.embed[local];
    const std::size_t x = g / s.c->size(), y = g % s.c->size();
    const bool bx = x < static_cast<std::size_t>(N), by = y < static_cast<std::size_t>(N);
    const long long sum = static_cast<long long>(x % N + y % N);
    if (!bx && !by) return ci.mod(sum) == ci.mod(n);
    if (bx && by) return ci.mod(sum) == ci.mod(n - 1);
    return false;
  };
  std::vector<std::size_t> je;
  for (std::size_t a = 0; a < P.size(); ++a)
    if (in_j(a)) je.push_back(a);
  z.j = full_subposet(P, je);
  const PosetPtr jp = share(z.j.poset), sp = share(P);
  z.theta = MonotoneMap(jp, sp, z.j.embed);

  std::vector<std::size_t> L(P.size());
  for (std::size_t a = 0; a < P.size(); ++a) {
    std::vector<std::size_t> cand;
    for (std::size_t t = 0; t < z.j.poset.size(); ++t) {
      const std::size_t e = z.j.embed[t];
      if (e == a) {
        cand = {t};
        break;
      }
      const std::size_t g = z.slice.embed[e];
      const bool zz = g / s.c->size() >= static_cast<std::size_t>(N) && g % s.c->size() >= static_cast<std::size_t>(N);
      if (zz && P.leq(a, e)) cand.push_back(t);
    }
    if (cand.size() != 1) {
      z.note = P.label(a).str() + " has " + std::to_string(cand.size()) + " candidate images";
      return z;
    }
    L[a] = cand[0];
  }
  try {
    z.retraction = MonotoneMap(sp, jp, std::move(L));
  } catch (const Error& e) {
    z.note = e.what();
  }
  return z;
}

}  // namespace franke::posetkit
