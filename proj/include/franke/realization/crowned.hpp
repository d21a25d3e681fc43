#pragma once

#include "franke/diagramkit.hpp"

#include <map>
#include <vector>

namespace franke::realization {

using diagramkit::ComplexDiagram;
using diagramkit::Edge;
using exactlin::IntMatrix;
using exactlin::Integer;
using exactlin::SparseMatrix;
using percomplex::ChainMap;
using percomplex::ComplexPtr;
using percomplex::GradedMap;
using percomplex::GradedModule;
using percomplex::Homology;
using percomplex::PeriodicComplex;
using percomplex::slot_mod;
using posetkit::CrownIndex;

/// A diagram on crown(N): l_i : X(b_i) -> X(z_i) and k_i : X(b_{i-1}) -> X(z_i).
class CrownedDiagram {
 public:
  CrownedDiagram() = default;

  explicit CrownedDiagram(ComplexDiagram d) : diagram_(std::move(d)) {
    const int N = diagram_.period();
    require(N >= 2, ErrorKind::period_mismatch, "crowned diagrams need period at least 2");
    require(diagram_.shape() == posetkit::crown(N), ErrorKind::shape_mismatch, "shape is not crown(N)");
  }

  const ComplexDiagram& diagram() const { return diagram_; }
  int period() const { return diagram_.period(); }
  CrownIndex index() const { return {period()}; }

  const PeriodicComplex& beta(long long i) const { return diagram_.vertex(index().beta(i)); }
  const PeriodicComplex& zeta(long long i) const { return diagram_.vertex(index().zeta(i)); }
  const ComplexPtr& beta_ptr(long long i) const { return diagram_.vertex_ptr(index().beta(i)); }
  const ComplexPtr& zeta_ptr(long long i) const { return diagram_.vertex_ptr(index().zeta(i)); }
  const ChainMap& l(long long i) const { return diagram_.map(index().beta(i), index().zeta(i)); }
  const ChainMap& k(long long i) const { return diagram_.map(index().beta(i - 1), index().zeta(i)); }

 private:
  ComplexDiagram diagram_;
};

/// Assembles a crowned diagram; ls[i] : betas[i] -> zetas[i], ks[i] : betas[i-1] -> zetas[i].
inline CrownedDiagram make_crowned(int N, const std::vector<ComplexPtr>& betas, const std::vector<ComplexPtr>& zetas,
                                   const std::vector<ChainMap>& ls, const std::vector<ChainMap>& ks) {
  require(N >= 2, ErrorKind::period_mismatch, "crowned diagrams need period at least 2");
  const auto sz = static_cast<std::size_t>(N);
  require(betas.size() == sz && zetas.size() == sz && ls.size() == sz && ks.size() == sz, ErrorKind::shape_mismatch,
          "need N betas, zetas, l and k maps");
  const CrownIndex ci{N};
  std::vector<ComplexPtr> v(2 * sz);
  for (int i = 0; i < N; ++i) {
    v[ci.beta(i)] = betas[i];
    v[ci.zeta(i)] = zetas[i];
  }
  std::map<Edge, ChainMap> e;
  for (int i = 0; i < N; ++i) {
    e.emplace(Edge{ci.beta(i), ci.zeta(i)}, ls[i]);
    e.emplace(Edge{ci.beta(i - 1), ci.zeta(i)}, ks[i]);
  }
  return CrownedDiagram(ComplexDiagram(posetkit::share(posetkit::crown(N)), std::move(v), std::move(e)));
}

/// Vertex complexes are one-slot spheres: Z^z_i at z_i (slot i) and Z^b_i at b_i (slot i).
/// lambdas[i] is the z_i x b_i matrix of l_i; every k_i is zero.
inline CrownedDiagram sphere_crowned(int N, const std::vector<IntMatrix>& lambdas) {
  std::vector<ComplexPtr> b, z;
  std::vector<ChainMap> ls, ks;
  for (int i = 0; i < N; ++i) {
    b.push_back(percomplex::share(PeriodicComplex::concentrated(N, i, lambdas[i].cols())));
    z.push_back(percomplex::share(PeriodicComplex::concentrated(N, i, lambdas[i].rows())));
  }
  for (int i = 0; i < N; ++i) {
    std::vector<SparseMatrix> lb, kb;
    for (int n = 0; n < N; ++n) {
      lb.push_back(n == i ? SparseMatrix::from_dense(lambdas[i]) : SparseMatrix(z[i]->rank(n), b[i]->rank(n)));
      kb.emplace_back(z[i]->rank(n), b[slot_mod(i - 1, N)]->rank(n));
    }
    ls.emplace_back(b[i], z[i], std::move(lb));
    ks.emplace_back(b[slot_mod(i - 1, N)], z[i], std::move(kb));
  }
  return make_crowned(N, b, z, ls, ks);
}

/// X(b_0) = X(z_0) = Z in slot 0, l_0 = multiplication by 3, everything else zero.
inline CrownedDiagram moore_fixture(int N = 2, const Integer& p = 3) {
  std::vector<IntMatrix> lambdas(N, IntMatrix(0, 0));
  lambdas[0] = IntMatrix(1, 1);
  lambdas[0](0, 0) = p;
  return sphere_crowned(N, lambdas);
}

/// Z at z_0 only.
inline CrownedDiagram unit_crowned(int N) {
  std::vector<IntMatrix> lambdas(N, IntMatrix(0, 0));
  lambdas[0] = IntMatrix(1, 0);
  return sphere_crowned(N, lambdas);
}

/// The disk diagram: X(b_{s-1}) = X(z_{s-1}) = Z^rank in slot s-1 with identity edge.
inline CrownedDiagram disk_crowned(int N, long long s, std::size_t rank = 1) {
  std::vector<IntMatrix> lambdas(N, IntMatrix(0, 0));
  lambdas[slot_mod(s - 1, N)] = IntMatrix::identity(rank);
  return sphere_crowned(N, lambdas);
}

}  // namespace franke::realization
