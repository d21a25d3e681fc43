#pragma once

#include "franke/realization/verifiers.hpp"

namespace franke::realization {

using diagramkit::BarComplex;
using posetkit::MonotoneMap;

/// H_0(I; H D) computed from the bar complex against the colimit of H D.
inline Report h0_colimit_verify(const ComplexDiagram& D) {
  Report r{"h0_colimit", {}};
  const auto M = diagramkit::homology_diagram(D);
  detail::compare(r, "H0 = colim", diagramkit::category_homology(M)[0], diagramkit::colimit(M));
  return r;
}

/// D(a) -> D(a) (+) disks, with edges f (+) 0; the induced map of bar complexes must be a quasi-isomorphism.
inline Report hocolim_invariance_verify(const ComplexDiagram& D, const std::vector<std::vector<int>>& tops) {
  Report r{"hocolim_invariance", {}};
  const int N = D.period();
  const auto& P = D.shape();
  std::vector<ComplexPtr> verts;
  std::vector<ChainMap> F;
  for (std::size_t a = 0; a < P.size(); ++a) {
    PeriodicComplex disks = PeriodicComplex::zero(N);
    for (int t : tops[a]) {
      std::vector<std::size_t> ranks(N, 0);
      ranks[slot_mod(t, N)] += 1;
      ranks[slot_mod(t - 1, N)] += 1;
      std::vector<SparseMatrix> d;
      for (int n = 0; n < N; ++n) d.emplace_back(ranks[slot_mod(n - 1, N)], ranks[n]);
      d[slot_mod(t, N)].add(0, 0, 1);
      disks = percomplex::direct_sum(disks, PeriodicComplex(N, ranks, std::move(d)));
    }
    verts.push_back(percomplex::share(percomplex::direct_sum(D.vertex(a), disks)));
    std::vector<SparseMatrix> b;
    for (int n = 0; n < N; ++n) {
      SparseMatrix m(verts[a]->rank(n), D.vertex(a).rank(n));
      SparseMatrix::identity(D.vertex(a).rank(n)).paste_into(m, 0, 0);
      b.push_back(std::move(m));
    }
    F.emplace_back(D.vertex_ptr(a), verts[a], std::move(b));
  }
  std::map<Edge, ChainMap> edges;
  for (const auto& [e, f] : D.edges()) {
    std::vector<SparseMatrix> b;
    for (int n = 0; n < N; ++n) {
      SparseMatrix m(verts[e.second]->rank(n), verts[e.first]->rank(n));
      f.block(n).paste_into(m, 0, 0);
      b.push_back(std::move(m));
    }
    edges.emplace(e, ChainMap(verts[e.first], verts[e.second], std::move(b)));
  }
  const ComplexDiagram D2(D.shape_ptr(), verts, std::move(edges), N);
  const BarComplex src(D), dst(D2);
  const ChainMap bf = diagramkit::bar_map(F, src, dst);
  const GradedMap h = percomplex::induced_map(bf);
  r.add("quasi-isomorphism", h.is_isomorphism(),
        h.is_isomorphism() ? "" : h.source_module().str() + " -> " + h.target_module().str());
  return r;
}

/// hocolim of the left Kan extension along f against hocolim of D.
inline Report kan_preservation_verify(const MonotoneMap& f, const ComplexDiagram& D) {
  Report r{"kan_preservation", {}};
  detail::compare(r, "hocolim", percomplex::homology(diagramkit::hocolim(diagramkit::left_kan(f, D).diagram)),
                  percomplex::homology(diagramkit::hocolim(D)));
  return r;
}

/// 0 -> H(X) (x) H(Y) -> H(X (x) Y) -> Tor(H X, H Y)[1] -> 0.
inline Report kunneth_verify(const PeriodicComplex& X, const PeriodicComplex& Y) {
  Report r{"kunneth", {}};
  GradedMap k;
  try {
    k = percomplex::kunneth_map(X, Y);
  } catch (const Error& e) {
    r.add("tensor", false, e.what());
    return r;
  }
  r.add("injective", k.is_injective());
  detail::compare(r, "cokernel = Tor", k.cokernel_module(),
                  percomplex::graded_tor(percomplex::homology(X), percomplex::homology(Y)));
  return r;
}

/// H of the derived pushout product of two monomorphisms between one-slot complexes.
/// "kernel = Tor" is the classical answer; "injective" is the monomorphy claim.
inline Report ppinjective_verify(const ChainMap& f, const ChainMap& g) {
  Report r{"ppinjective", {}};
  const auto pp = diagramkit::pushout_product(f, g);
  const GradedMap h = percomplex::induced_map(pp.map);
  const int N = h.period;
  int slot = -1;
  for (int n = 0; n < N; ++n)
    if (!f.block(n).is_zero()) slot = n;
  exactlin::FgAbelianGroup tor;
  if (slot >= 0)
    tor = exactlin::tor(exactlin::cokernel(f.block(slot).to_dense()), exactlin::cokernel(g.block(0).to_dense()));
  GradedModule kernel = GradedModule::zero(N);
  {
    std::vector<exactlin::FgAbelianGroup> g_(N);
    for (int n = 0; n < N; ++n) g_[n] = h.kernel(n);
    kernel = GradedModule(N, std::move(g_));
  }
  detail::compare(r, "kernel = Tor", kernel, GradedModule::concentrated(N, slot < 0 ? 0 : slot, tor));
  r.add("injective", h.is_injective(), h.is_injective() ? "" : "kernel " + kernel.str());
  return r;
}

/// (CX <- X -> CX) mapped to (SX <- 0 -> SX) by the cone boundary. On homology each leg of the
/// target is an isomorphism from H(hocolim) and the two legs agree up to the sign `expected_sign`.
inline Report diagonal_verify(const PeriodicComplex& Xc, int expected_sign = -1) {
  Report r{"diagonal", {}};
  const int N = Xc.period();
  const ComplexPtr X = percomplex::share(Xc);
  const ComplexPtr zero = percomplex::share(PeriodicComplex::zero(N));
  const percomplex::Cone c = percomplex::cone(ChainMap::identity(X));
  const ComplexPtr S = c.bdry.target_ptr();
  const auto shape = posetkit::share(posetkit::corner());
  std::map<Edge, ChainMap> e1, e2;
  e1.emplace(Edge{0, 1}, c.incl);
  e1.emplace(Edge{0, 2}, c.incl);
  e2.emplace(Edge{0, 1}, ChainMap::zero(zero, S));
  e2.emplace(Edge{0, 2}, ChainMap::zero(zero, S));
  const ComplexDiagram D1(shape, {X, c.complex, c.complex}, std::move(e1), N);
  const ComplexDiagram D2(shape, {zero, S, S}, std::move(e2), N);
  const BarComplex b1(D1), b2(D2);
  const ChainMap F = diagramkit::bar_map({ChainMap::zero(X, zero), c.bdry, c.bdry}, b1, b2);
  const Homology h1(b1.complex_ptr()), hs(S);
  std::vector<GradedMap> legs;
  for (std::size_t top : {1, 2}) {
    const auto ch = b2.find_chain({top});
    std::vector<SparseMatrix> blocks;
    for (int n = 0; n < N; ++n) {
      SparseMatrix m(S->rank(n), b2.complex().rank(n));
      for (std::size_t k = 0; k < S->rank(n); ++k) m.add(k, b2.index(*ch, n, k), 1);
      blocks.push_back(std::move(m));
    }
    const ChainMap proj(b2.complex_ptr(), S, std::move(blocks));
    legs.push_back(percomplex::induced_map(percomplex::compose(proj, F), h1, hs));
    r.add("leg " + std::to_string(top) + " iso", legs.back().is_isomorphism());
  }
  std::vector<IntMatrix> diff;
  for (int n = 0; n < N; ++n) {
    IntMatrix m = legs[0].components[n];
    const IntMatrix& b = legs[1].components[n];
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= expected_sign * b(i, j);
    diff.push_back(std::move(m));
  }
  const GradedMap d(N, 0, legs[0].source, legs[0].target, diff);
  r.add("legs differ by sign " + std::to_string(expected_sign), d.is_zero());
  return r;
}

}  // namespace franke::realization
