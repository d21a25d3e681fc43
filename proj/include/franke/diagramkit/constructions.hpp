#pragma once

#include "franke/diagramkit/bar.hpp"

namespace franke::diagramkit {

using exactlin::IntMatrix;
using exactlin::Integer;
using exactlin::Presentation;
using percomplex::Homology;

/// Strict colimit with its legs; throws NotFree when a slot of the quotient has torsion.
struct Colimit {
  ComplexPtr complex;
  std::vector<ChainMap> legs;
};

inline Colimit colimit(const ComplexDiagram& D) {
  const auto& P = D.shape();
  const int N = D.period();
  const auto cov = P.covers();
  std::vector<std::size_t> ranks(N);
  std::vector<IntMatrix> proj(N), lift(N);
  std::vector<std::vector<std::size_t>> voff(N, std::vector<std::size_t>(P.size() + 1, 0));
  for (int n = 0; n < N; ++n) {
    for (std::size_t a = 0; a < P.size(); ++a) voff[n][a + 1] = voff[n][a] + D.vertex(a).rank(n);
    const std::size_t total = voff[n][P.size()];
    std::vector<std::vector<Integer>> rel;
    for (const auto& [a, b] : cov) {
      const auto& f = D.edges().at({a, b}).block(n);
      for (std::size_t e = 0; e < D.vertex(a).rank(n); ++e) {
        std::vector<Integer> v(total);
        v[voff[n][a] + e] = -1;
        for (const auto& [i, x] : f.column(e)) v[voff[n][b] + i] += x;
        rel.push_back(std::move(v));
      }
    }
    const auto s = exactlin::smith_normal_form(exactlin::from_columns(total, rel));
    for (const auto& x : s.diagonal)
      require(x == 1, ErrorKind::not_free, "colimit has torsion in slot " + std::to_string(n));
    ranks[n] = total - s.rank();
    proj[n] = s.u.rows_range(s.rank(), ranks[n]);
    lift[n] = s.u_inv.cols_range(s.rank(), ranks[n]);
  }
  auto block_diag_d = [&](int n) {
    IntMatrix m(voff[slot_mod(n - 1, N)][P.size()], voff[n][P.size()]);
    for (std::size_t a = 0; a < P.size(); ++a)
      m.set_block(voff[slot_mod(n - 1, N)][a], voff[n][a], D.vertex(a).d(n).to_dense());
    return m;
  };
  std::vector<SparseMatrix> d;
  for (int n = 0; n < N; ++n)
    d.push_back(SparseMatrix::from_dense(proj[slot_mod(n - 1, N)] * block_diag_d(n) * lift[n]));
  Colimit out;
  out.complex = percomplex::share(PeriodicComplex(N, ranks, std::move(d)));
  for (std::size_t a = 0; a < P.size(); ++a) {
    std::vector<SparseMatrix> b;
    for (int n = 0; n < N; ++n)
      b.push_back(SparseMatrix::from_dense(proj[n].cols_range(voff[n][a], D.vertex(a).rank(n))));
    out.legs.emplace_back(D.vertex_ptr(a), out.complex, std::move(b));
  }
  return out;
}

/// Vertexwise homology with induced maps.
inline ModuleDiagram homology_diagram(const ComplexDiagram& D) {
  std::vector<Homology> h;
  for (const auto& v : D.vertices()) h.emplace_back(v);
  std::vector<GradedModule> mods;
  for (const auto& x : h) mods.push_back(x.module());
  std::map<Edge, GradedMap> e;
  for (const auto& [k, f] : D.edges()) e.emplace(k, percomplex::induced_map(f, h[k.first], h[k.second]));
  return ModuleDiagram(D.shape_ptr(), std::move(mods), std::move(e));
}

/// H_0 of the diagram: the colimit in graded groups.
inline GradedModule colimit(const ModuleDiagram& M) {
  const auto& P = M.shape();
  const int N = M.period();
  std::vector<exactlin::FgAbelianGroup> g;
  for (int n = 0; n < N; ++n) {
    std::vector<std::size_t> off(P.size() + 1, 0);
    for (std::size_t a = 0; a < P.size(); ++a) off[a + 1] = off[a] + M.vertex(a).group(n).num_generators();
    std::vector<std::vector<Integer>> rel;
    for (std::size_t a = 0; a < P.size(); ++a) {
      const auto& G = M.vertex(a).group(n);
      for (std::size_t t = 0; t < G.torsion().size(); ++t) {
        std::vector<Integer> v(off.back());
        v[off[a] + t] = G.torsion()[t];
        rel.push_back(std::move(v));
      }
    }
    for (const auto& [a, b] : P.covers()) {
      const IntMatrix f = M.map(a, b, n);
      for (std::size_t e = 0; e < f.cols(); ++e) {
        std::vector<Integer> v(off.back());
        v[off[a] + e] = -1;
        for (std::size_t i = 0; i < f.rows(); ++i) v[off[b] + i] += f(i, e);
        rel.push_back(std::move(v));
      }
    }
    g.push_back(exactlin::cokernel(exactlin::from_columns(off.back(), rel)));
  }
  return GradedModule(N, std::move(g));
}

/// H_p(I; M) for p = 0 .. height(I), from the bar complex of the module diagram.
inline std::vector<GradedModule> category_homology(const ModuleDiagram& M) {
  const auto& P = M.shape();
  const int N = M.period();
  const int h = P.height();
  std::vector<std::vector<posetkit::Chain>> ch;
  for (int p = 0; p <= h; ++p) ch.push_back(P.chains(static_cast<std::size_t>(p)));
  std::vector<std::vector<exactlin::FgAbelianGroup>> out(h + 1, std::vector<exactlin::FgAbelianGroup>(N));
  for (int q = 0; q < N; ++q) {
    // C_p = sum over p-chains (with nonzero value) of M(i_0)_q, as a presentation.
    struct Level {
      std::map<posetkit::Chain, std::size_t> off;
      Presentation pres;
    };
    std::vector<Level> lv(h + 1);
    for (int p = 0; p <= h; ++p) {
      for (const auto& c : ch[p]) {
        const auto& G = M.vertex(c[0]).group(q);
        if (G.is_zero()) continue;
        lv[p].off.emplace(c, lv[p].pres.generators);
        lv[p].pres = exactlin::direct_sum(lv[p].pres, Presentation::of(G));
      }
    }
    auto boundary = [&](int p) {
      IntMatrix m(p > 0 ? lv[p - 1].pres.generators : 0, lv[p].pres.generators);
      if (p == 0) return m;
      for (const auto& [c, o] : lv[p].off) {
        for (int k = 0; k <= p; ++k) {
          posetkit::Chain f = c;
          f.erase(f.begin() + k);
          auto it = lv[p - 1].off.find(f);
          if (it == lv[p - 1].off.end()) continue;  // zero group at the face's base
          const std::size_t ng = M.vertex(c[0]).group(q).num_generators();
          if (k == 0) {
            const IntMatrix fm = M.map(c[0], c[1], q);
            for (std::size_t e = 0; e < ng; ++e)
              for (std::size_t i = 0; i < fm.rows(); ++i) m(it->second + i, o + e) += fm(i, e);
          } else {
            for (std::size_t e = 0; e < ng; ++e) m(it->second + e, o + e) += exactlin::parity_sign(k);
          }
        }
      }
      return m;
    };
    for (int p = 0; p <= h; ++p) {
      const IntMatrix dp = boundary(p);
      const Presentation& here = lv[p].pres;
      // kernel lift: x with d x in the relations below
      IntMatrix kl;
      if (p == 0) {
        kl = IntMatrix::identity(here.generators);
      } else {
        const IntMatrix k = exactlin::kernel_basis(exactlin::hstack(dp, lv[p - 1].pres.relations));
        kl = k.rows_range(0, here.generators);
      }
      IntMatrix il = here.relations;
      if (p < h) il = exactlin::hstack(boundary(p + 1), il);
      out[p][q] = exactlin::subquotient(exactlin::image_basis(kl), il);
    }
  }
  std::vector<GradedModule> res;
  for (int p = 0; p <= h; ++p) res.emplace_back(N, out[p]);
  return res;
}

/// Left Kan extension along f: vertex j is hocolim over f/j, edges are inclusions.
struct LeftKan {
  ComplexDiagram diagram;
  std::vector<posetkit::SubPoset> slices;
  std::vector<ComplexDiagram> restricted;
  std::vector<BarComplex> bars;
};

inline LeftKan left_kan(const MonotoneMap& f, const ComplexDiagram& D) {
  require(f.source() == D.shape(), ErrorKind::shape_mismatch, "Kan extension along a map from another shape");
  const auto& J = f.target();
  LeftKan out;
  std::vector<ComplexPtr> verts;
  for (std::size_t j = 0; j < J.size(); ++j) {
    out.slices.push_back(posetkit::slice_over(f, j));
    out.restricted.push_back(D.restrict(posetkit::inclusion(out.slices.back(), D.shape_ptr())));
    out.bars.emplace_back(out.restricted.back());
    verts.push_back(out.bars.back().complex_ptr());
  }
  std::map<Edge, ChainMap> edges;
  for (const auto& [j, k] : J.covers()) {
    const auto& sj = out.slices[j];
    const auto& sk = out.slices[k];
    std::vector<std::size_t> img;
    for (std::size_t a : sj.embed)
      img.push_back(static_cast<std::size_t>(std::lower_bound(sk.embed.begin(), sk.embed.end(), a) - sk.embed.begin()));
    MonotoneMap inc(out.restricted[j].shape_ptr(), out.restricted[k].shape_ptr(), std::move(img));
    edges.emplace(Edge{j, k}, bar_map(inc, out.bars[j], out.restricted[j], out.bars[k]));
  }
  out.diagram = ComplexDiagram(f.target_ptr(), std::move(verts), std::move(edges), D.period());
  return out;
}

/// (X box Y)(a, b) = X(a) (x) Y(b) on the product shape.
inline ComplexDiagram external_tensor(const ComplexDiagram& X, const ComplexDiagram& Y) {
  const auto shape = posetkit::share(posetkit::product(X.shape(), Y.shape()));
  const std::size_t m = Y.shape().size();
  std::vector<ComplexPtr> v;
  for (std::size_t a = 0; a < X.shape().size(); ++a)
    for (std::size_t b = 0; b < m; ++b) v.push_back(percomplex::share(percomplex::tensor(X.vertex(a), Y.vertex(b))));
  std::map<Edge, ChainMap> e;
  for (const auto& [x, y] : shape->covers()) {
    const std::size_t a0 = x / m, b0 = x % m, a1 = y / m, b1 = y % m;
    const ChainMap fa = a0 == a1 ? ChainMap::identity(X.vertex_ptr(a0)) : X.map(a0, a1);
    const ChainMap fb = b0 == b1 ? ChainMap::identity(Y.vertex_ptr(b0)) : Y.map(b0, b1);
    e.emplace(Edge{x, y}, percomplex::tensor(fa, fb, v[x], v[y]));
  }
  return ComplexDiagram(shape, std::move(v), std::move(e), X.period());
}

/// Derived pushout product: the homotopy pushout of the corner maps to X1 (x) Y1.
struct PushoutProduct {
  ComplexDiagram corner;  // (0,0) X0Y0, (0,1) X0Y1, (1,0) X1Y0
  BarComplex bar;
  ComplexPtr codomain;
  ChainMap map;
};

inline PushoutProduct pushout_product(const ChainMap& f, const ChainMap& g) {
  using percomplex::share;
  const auto sq = posetkit::share(posetkit::square());
  const ComplexPtr x0y0 = share(percomplex::tensor(f.source(), g.source()));
  const ComplexPtr x0y1 = share(percomplex::tensor(f.source(), g.target()));
  const ComplexPtr x1y0 = share(percomplex::tensor(f.target(), g.source()));
  const ComplexPtr x1y1 = share(percomplex::tensor(f.target(), g.target()));
  const ChainMap ix = ChainMap::identity(f.source_ptr()), iy = ChainMap::identity(g.source_ptr());
  const ChainMap jx = ChainMap::identity(f.target_ptr()), jy = ChainMap::identity(g.target_ptr());
  std::map<Edge, ChainMap> e;
  e.emplace(Edge{0, 1}, percomplex::tensor(ix, g, x0y0, x0y1));
  e.emplace(Edge{0, 2}, percomplex::tensor(f, iy, x0y0, x1y0));
  e.emplace(Edge{1, 3}, percomplex::tensor(f, jy, x0y1, x1y1));
  e.emplace(Edge{2, 3}, percomplex::tensor(jx, g, x1y0, x1y1));
  const ComplexDiagram square_diag(sq, {x0y0, x0y1, x1y0, x1y1}, std::move(e));
  const posetkit::SubPoset c = posetkit::full_subposet(*sq, {0, 1, 2});
  PushoutProduct out;
  out.corner = square_diag.restrict(posetkit::inclusion(c, sq));
  out.bar = BarComplex(out.corner);
  out.codomain = x1y1;
  std::vector<ChainMap> cocone;
  for (std::size_t a = 0; a < 3; ++a) cocone.push_back(square_diag.map(a, 3));
  out.map = augmentation(out.bar, cocone, x1y1);
  return out;
}

/// Cone of the counit Lan_f f^*D -> D, vertexwise, as a diagram on the target of f.
struct CounitCone {
  LeftKan kan;
  std::vector<ChainMap> counit;
  std::vector<percomplex::Cone> cones;
  ComplexDiagram diagram;
};

inline CounitCone counit_cone(const MonotoneMap& f, const ComplexDiagram& D) {
  const auto& J = f.target();
  CounitCone out;
  out.kan = left_kan(f, D.restrict(f));
  std::vector<ComplexPtr> verts;
  for (std::size_t j = 0; j < J.size(); ++j) {
    std::vector<ChainMap> cocone;
    for (std::size_t a : out.kan.slices[j].embed) cocone.push_back(D.map(f(a), j));
    out.counit.push_back(augmentation(out.kan.bars[j], cocone, D.vertex_ptr(j)));
    out.cones.push_back(percomplex::cone(out.counit.back()));
    verts.push_back(out.cones.back().complex);
  }
  std::map<Edge, ChainMap> edges;
  for (const auto& [j, k] : J.covers()) {
    const ChainMap& a = D.map(j, k);
    const ChainMap& b = out.kan.diagram.map(j, k);
    const auto& sj = *out.cones[j].complex;
    const auto& tk = *out.cones[k].complex;
    std::vector<SparseMatrix> blocks;
    for (int n = 0; n < D.period(); ++n) {
      SparseMatrix m(tk.rank(n), sj.rank(n));
      a.block(n).paste_into(m, 0, 0);
      b.block(n - 1).paste_into(m, a.target().rank(n), a.source().rank(n));
      blocks.push_back(std::move(m));
    }
    edges.emplace(Edge{j, k}, ChainMap(out.cones[j].complex, out.cones[k].complex, std::move(blocks)));
  }
  out.diagram = ComplexDiagram(f.target_ptr(), std::move(verts), std::move(edges), D.period());
  return out;
}

}  // namespace franke::diagramkit
