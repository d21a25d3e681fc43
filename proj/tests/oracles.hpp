#pragma once

// Reference computations for the suites. They avoid the library's Smith form and homology engine.

#include "franke/exactlin.hpp"
#include "franke/percomplex.hpp"

#include <functional>

namespace oracle {

using franke::exactlin::IntMatrix;
using franke::exactlin::Integer;

// Oracles: cofactor determinants and determinantal divisors. Slow, but share nothing with the SNF code.
inline Integer det_cofactor(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix m(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) m(r - 1, cc++) = a(r, c);
    s += (j % 2 ? -1 : 1) * a(0, j) * det_cofactor(m);
  }
  return s;
}

inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> s(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t start) {
    if (i == k) return f(s);
    for (std::size_t x = start; x < n; ++x) {
      s[i] = x;
      rec(i + 1, x + 1);
    }
  };
  rec(0, 0);
}

// d_k = gcd of k x k minors; invariant factors are d_k / d_{k-1}.
inline std::vector<Integer> factors_oracle(const IntMatrix& a) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    Integer g = 0;
    subsets(a.rows(), k, [&](const std::vector<std::size_t>& rs) {
      subsets(a.cols(), k, [&](const std::vector<std::size_t>& cs) {
        IntMatrix m(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m(i, j) = a(rs[i], cs[j]);
        g = franke::exactlin::gcd(g, det_cofactor(m));
      });
    });
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// H_n = ker d_n / im d_{n+1}, read off determinantal divisors of the dense differentials.
inline franke::percomplex::GradedModule homology_oracle(const franke::percomplex::PeriodicComplex& c) {
  const int N = c.period();
  std::vector<franke::exactlin::FgAbelianGroup> g;
  for (int n = 0; n < N; ++n) {
    const auto out = factors_oracle(c.d(n).to_dense());
    const auto in = factors_oracle(c.d(n + 1).to_dense());
    std::vector<Integer> tors;
    for (const auto& f : in)
      if (f > 1) tors.push_back(f);
    g.emplace_back(c.rank(n) - out.size() - in.size(), tors);
  }
  return franke::percomplex::GradedModule(N, std::move(g));
}

}  // namespace oracle
