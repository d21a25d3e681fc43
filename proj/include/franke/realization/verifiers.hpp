#pragma once

#include "franke/realization/q.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace franke::realization {

using posetkit::CrownShapes;

/// One named check inside a verification; `detail` explains a failure.
struct Stage {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string check;
  std::vector<Stage> stages;

  bool pass() const {
    for (const auto& s : stages)
      if (!s.pass) return false;
    return !stages.empty();
  }
  void add(std::string name, bool ok, std::string detail = {}) {
    stages.push_back({std::move(name), ok, std::move(detail)});
  }
  const Stage* first_failure() const {
    for (const auto& s : stages)
      if (!s.pass) return &s;
    return nullptr;
  }
  std::string summary() const {
    if (const Stage* f = first_failure()) return check + ": FAIL at " + f->name + (f->detail.empty() ? "" : " (" + f->detail + ")");
    return check + ": pass";
  }
};

namespace detail {

inline std::string mismatch(const GradedModule& a, const GradedModule& b) {
  return a.str() + " vs " + b.str();
}

inline void compare(Report& r, const std::string& name, const GradedModule& a, const GradedModule& b) {
  r.add(name, a == b, a == b ? "" : mismatch(a, b));
}

inline IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
  return exactlin::kronecker(SparseMatrix::from_dense(a), SparseMatrix::from_dense(b)).to_dense();
}

inline bool all_vertex_homology_free(const CrownedDiagram& X) {
  for (const auto& v : X.diagram().vertices())
    if (!percomplex::homology(*v).is_free()) return false;
  return true;
}

// Position of a global element inside a sorted embedding.
inline std::size_t local_index(const posetkit::SubPoset& s, std::size_t global) {
  auto it = std::lower_bound(s.embed.begin(), s.embed.end(), global);
  require(it != s.embed.end() && *it == global, ErrorKind::shape_mismatch, "element not in the slice");
  return static_cast<std::size_t>(it - s.embed.begin());
}

}  // namespace detail

/// X box Y on C_N x C_N, its left Kan extension E along pr, and i^*E.
struct TensorPipeline {
  CrownShapes shapes;
  CrownedDiagram X, Y;
  ComplexDiagram XY;
  diagramkit::LeftKan E;
  CrownedDiagram iE;
};

inline TensorPipeline tensor_pipeline(const CrownedDiagram& X, const CrownedDiagram& Y) {
  require(X.period() == Y.period(), ErrorKind::period_mismatch, "diagrams of different periods");
  TensorPipeline p;
  p.shapes = posetkit::crown_shapes(X.period());
  p.X = X;
  p.Y = Y;
  const ComplexDiagram xy = diagramkit::external_tensor(X.diagram(), Y.diagram());
  std::map<Edge, ChainMap> edges = xy.edges();
  p.XY = ComplexDiagram(p.shapes.cc, xy.vertices(), std::move(edges));
  p.E = diagramkit::left_kan(p.shapes.pr, p.XY);
  p.iE = CrownedDiagram(p.E.diagram.restrict(p.shapes.i));
  return p;
}

/// Q(X), Q(Y) and Q(i^*E) of one instance, each possibly absent with the reason.
struct QTriple {
  std::optional<QOutput> x, y, e;
  std::string error;
};

inline QTriple q_triple(const TensorPipeline& p) {
  QTriple t;
  try {
    t.x = Q(p.X);
    t.y = Q(p.Y);
    t.e = Q(p.iE);
  } catch (const Error& e) {
    t.error = e.what();
  }
  return t;
}

inline void require_hypotheses(const CrownedDiagram& X, const CrownedDiagram& Y) {
  const auto lx = check_L(X), ly = check_L(Y);
  require(lx.member, ErrorKind::hypothesis_failure, "first diagram not in L: " + lx.failure);
  require(ly.member, ErrorKind::hypothesis_failure, "second diagram not in L: " + ly.failure);
  require(detail::all_vertex_homology_free(X) && detail::all_vertex_homology_free(Y), ErrorKind::hypothesis_failure,
          "vertex homology is not free");
}

/// Q(i^*E) against Q(X) (x) Q(Y): membership, slotwise ranks, homology.
inline Report theorem_A_verify(const TensorPipeline& p) {
  require_hypotheses(p.X, p.Y);
  Report r{"theoremA", {}};
  const auto m = check_L(p.iE);
  r.add("membership", m.member, m.failure);
  if (!m.member) return r;
  const QTriple q = q_triple(p);
  r.add("Q", q.e.has_value(), q.error);
  if (!q.e) return r;
  PeriodicComplex t;
  try {
    t = percomplex::tensor(*q.x->complex, *q.y->complex);
  } catch (const Error& e) {
    r.add("tensor", false, e.what());
    return r;
  }
  const auto& c = *q.e->complex;
  std::ostringstream ranks;
  for (int n = 0; n < c.period(); ++n) ranks << (n ? "," : "") << c.rank(n) << "/" << t.rank(n);
  r.add("ranks", c.ranks() == t.ranks(), ranks.str());
  detail::compare(r, "homology", percomplex::homology(c), percomplex::homology(t));
  return r;
}

inline Report theorem_A_verify(const CrownedDiagram& X, const CrownedDiagram& Y) {
  require_hypotheses(X, Y);
  return theorem_A_verify(tensor_pipeline(X, Y));
}

/// E(z_n) modulo the chains lying over g_{n-1}, the model for cone(k^_n) used for basis transport.
struct RelativeBar {
  ComplexPtr complex;
  std::vector<std::vector<long long>> to_quotient;  // per slot: bar index -> quotient index or -1
};

inline RelativeBar relative_bar(const TensorPipeline& p, long long n) {
  const auto& S = p.shapes;
  const auto di = S.di();
  const std::size_t z = di.zeta(n);
  const auto& bar = p.E.bars[z];
  const auto& slice = p.E.slices[z];
  const int N = S.period;
  std::vector<bool> outside(bar.chains().size(), false);
  for (std::size_t c = 0; c < bar.chains().size(); ++c)
    for (std::size_t a : bar.chains()[c])
      if (!S.d->leq(S.pr(slice.embed[a]), di.gamma(n - 1))) outside[c] = true;
  RelativeBar rb;
  rb.to_quotient.assign(N, {});
  std::vector<std::size_t> ranks(N, 0);
  for (int t = 0; t < N; ++t) rb.to_quotient[t].assign(bar.complex().rank(t), -1);
  const auto& D = p.E.restricted[z];
  for (std::size_t c = 0; c < bar.chains().size(); ++c) {
    if (!outside[c]) continue;
    const auto& V = D.vertex(bar.chains()[c][0]);
    for (int m = 0; m < N; ++m)
      for (std::size_t e = 0; e < V.rank(m); ++e) {
        const int t = bar.total_slot(c, m);
        rb.to_quotient[t][bar.index(c, m, e)] = static_cast<long long>(ranks[t]++);
      }
  }
  std::vector<SparseMatrix> d;
  for (int t = 0; t < N; ++t) {
    SparseMatrix m(ranks[slot_mod(t - 1, N)], ranks[t]);
    const auto& src = rb.to_quotient[t];
    const auto& dst = rb.to_quotient[slot_mod(t - 1, N)];
    for (std::size_t j = 0; j < src.size(); ++j) {
      if (src[j] < 0) continue;
      for (const auto& [i, x] : bar.complex().d(t).column(j))
        if (dst[i] >= 0) m.add(static_cast<std::size_t>(dst[i]), static_cast<std::size_t>(src[j]), x);
    }
    d.push_back(std::move(m));
  }
  rb.complex = percomplex::share(PeriodicComplex(N, std::move(ranks), std::move(d)));
  return rb;
}

inline SparseVec project(const RelativeBar& rb, int slot, const SparseVec& v) {
  SparseVec out;
  for (const auto& [i, x] : v)
    if (const long long q = rb.to_quotient[slot][i]; q >= 0) out.emplace_back(static_cast<std::uint32_t>(q), x);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

/// Shuffle map cone(k_i) (x) cone(k~_j) -> E(z_n) / E(g_{n-1}) with n = i + j.
/// A cone element (y, x) corresponds to the relative chains (z, y) + (b < z, x); the product of two
/// relative chains is the signed sum over shuffles, with the Koszul sign of the second chain's bar
/// degree passing the first element.
inline ChainMap shuffle_map(const TensorPipeline& p, const QTriple& q, const RelativeBar& rb, long long i, long long j) {
  const auto& S = p.shapes;
  const int N = S.period;
  const auto ci = S.ci();
  const long long n = i + j;
  const std::size_t z = S.di().zeta(n);
  const auto& bar = p.E.bars[z];
  const auto& slice = p.E.slices[z];
  const auto& cx = q.x->cones[slot_mod(i, N)];
  const auto& cy = q.y->cones[slot_mod(j, N)];
  const ComplexPtr src = percomplex::share(percomplex::tensor(*cx.complex, *cy.complex));
  const auto Ls = percomplex::tensor_layout(*cx.complex, *cy.complex);
  const std::size_t zi = ci.zeta(i), zj = ci.zeta(j), bi = ci.beta(i - 1), bj = ci.beta(j - 1);
  auto chain_id = [&](std::initializer_list<std::pair<std::size_t, std::size_t>> elems) {
    posetkit::Chain c;
    for (const auto& [a, b] : elems) c.push_back(detail::local_index(slice, S.pair(a, b)));
    const auto id = bar.find_chain(c);
    require(id.has_value(), ErrorKind::shape_mismatch, "shuffle chain missing");
    return *id;
  };
  const std::size_t c_zz = chain_id({{zi, zj}});
  const std::size_t c_bz = chain_id({{bi, zj}, {zi, zj}});
  const std::size_t c_zb = chain_id({{zi, bj}, {zi, zj}});
  const std::size_t c_bb1 = chain_id({{bi, bj}, {zi, bj}, {zi, zj}});
  const std::size_t c_bb2 = chain_id({{bi, bj}, {bi, zj}, {zi, zj}});
  const auto& X = p.X;
  const auto& Y = p.Y;
  std::vector<SparseMatrix> blocks;
  for (int t = 0; t < N; ++t) blocks.emplace_back(rb.complex->rank(t), src->rank(t));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      const int t = slot_mod(a + b, N);
      // cone(k_i) slot a = X(z_i)_a + X(b_{i-1})_{a-1}
      const std::size_t yx = X.zeta(i).rank(a), xx = X.beta(i - 1).rank(a - 1);
      const std::size_t yy = Y.zeta(j).rank(b), xy = Y.beta(j - 1).rank(b - 1);
      auto put = [&](std::size_t chain, int m1, std::size_t u, int m2, std::size_t w, std::size_t col, int sign,
                     const PeriodicComplex& left, const PeriodicComplex& right) {
        const auto L = percomplex::tensor_layout(left, right);
        const int m = slot_mod(m1 + m2, N);
        const std::size_t row = bar.index(chain, m, L.index(slot_mod(m1, N), u, slot_mod(m2, N), w));
        const long long qrow = rb.to_quotient[t][row];
        if (qrow >= 0) blocks[t].add(static_cast<std::size_t>(qrow), col, sign);
      };
      for (std::size_t u = 0; u < yx + xx; ++u)
        for (std::size_t w = 0; w < yy + xy; ++w) {
          const std::size_t col = Ls.index(a, u, b, w);
          const bool ux = u >= yx, wx = w >= yy;
          const std::size_t uu = ux ? u - yx : u, ww = wx ? w - yy : w;
          if (!ux && !wx) {
            put(c_zz, a, uu, b, ww, col, 1, X.zeta(i), Y.zeta(j));
          } else if (ux && !wx) {
            put(c_bz, a - 1, uu, b, ww, col, 1, X.beta(i - 1), Y.zeta(j));
          } else if (!ux && wx) {
            put(c_zb, a, uu, b - 1, ww, col, exactlin::parity_sign(slot_mod(a, N)), X.zeta(i), Y.beta(j - 1));
          } else {
            const int s = exactlin::parity_sign(slot_mod(a - 1, N));
            put(c_bb1, a - 1, uu, b - 1, ww, col, s, X.beta(i - 1), Y.beta(j - 1));
            put(c_bb2, a - 1, uu, b - 1, ww, col, -s, X.beta(i - 1), Y.beta(j - 1));
          }
        }
    }
  return ChainMap(src, rb.complex, std::move(blocks));
}

/// The differential of Q(i^*E) written in the basis transported from C(X) (x) C(Y) by the shuffle maps.
struct Transport {
  bool ok = false;
  std::string detail;
  std::vector<IntMatrix> differential;  // per slot, in the tensor basis
};

inline Transport transported_differential(const TensorPipeline& p, const QTriple& q) {
  const int N = p.shapes.period;
  Transport tr;
  std::vector<IntMatrix> basis(N);
  for (int n = 0; n < N; ++n) {
    const RelativeBar rb = relative_bar(p, n);
    const Homology hq(rb.complex);
    const auto& he = *q.e->cone_h[n];
    const auto& cone = q.e->cones[n];
    // cone(k^_n) -> relative bar is the projection of the E(z_n) part
    std::vector<SparseVec> imgs;
    for (const auto& g : he.generators(n)) {
      SparseVec y;
      for (const auto& [a, x] : g)
        if (a < cone.incl.source().rank(n)) y.emplace_back(a, x);
      imgs.push_back(project(rb, n, y));
    }
    const IntMatrix P = detail::coordinates_matrix(hq, n, imgs);
    if (!hq.group(n).is_free() || !exactlin::is_unimodular(P)) {
      tr.detail = "slot " + std::to_string(n) + ": cone(k^) and the relative bar differ in homology";
      return tr;
    }
    std::vector<std::vector<Integer>> cols;
    for (int i = 0; i < N; ++i) {
      const int j = slot_mod(n - i, N);
      const ChainMap phi = shuffle_map(p, q, rb, i, j);
      const auto& hx = *q.x->cone_h[i];
      const auto& hy = *q.y->cone_h[j];
      const auto L = percomplex::tensor_layout(*q.x->cones[i].complex, *q.y->cones[j].complex);
      for (const auto& gx : hx.generators(i))
        for (const auto& gy : hy.generators(j))
          cols.push_back(hq.coordinates(n, phi.block(n).apply(percomplex::tensor_vectors(L, i, gx, j, gy))));
    }
    const IntMatrix T = exactlin::from_columns(P.rows(), cols);
    if (!exactlin::is_unimodular(T)) {
      tr.detail = "slot " + std::to_string(n) + ": shuffle classes are not a basis";
      return tr;
    }
    // P is unimodular, so P^-1 = V U and B = P^-1 T expresses the transported basis in cone coordinates
    const auto sp = exactlin::smith_normal_form(P);
    basis[n] = sp.v * sp.u * T;
  }
  for (int n = 0; n < N; ++n) {
    const int m = slot_mod(n - 1, N);
    const IntMatrix de = q.e->complex->d(n).to_dense();
    const auto sb = exactlin::smith_normal_form(basis[m]);
    const IntMatrix out = sb.v * sb.u * de * basis[n];
    tr.differential.push_back(std::move(out));
  }
  tr.ok = true;
  return tr;
}

/// Disk diagrams D^s(Z^ls), D^t(Z^mt): the transported differential equals the Koszul one exactly.
inline Report disks_differential_verify(int N, long long s, long long t, std::size_t ls = 1, std::size_t mt = 1) {
  Report r{"disks", {}};
  const TensorPipeline p = tensor_pipeline(disk_crowned(N, s, ls), disk_crowned(N, t, mt));
  const QTriple q = q_triple(p);
  r.add("Q", q.e.has_value(), q.error);
  if (!q.e) return r;
  PeriodicComplex koszul;
  try {
    koszul = percomplex::tensor(*q.x->complex, *q.y->complex);
  } catch (const Error& e) {
    r.add("koszul", false, e.what());
    return r;
  }
  const Transport tr = transported_differential(p, q);
  r.add("transport", tr.ok, tr.detail);
  if (!tr.ok) return r;
  for (int n = 0; n < N; ++n) {
    const IntMatrix expect = koszul.d(n).to_dense();
    std::ostringstream os;
    if (tr.differential[n] != expect) os << "got\n" << tr.differential[n] << "expected\n" << expect;
    r.add("d" + std::to_string(n), tr.differential[n] == expect, os.str());
  }
  return r;
}

/// Homology of the three comparisons behind hocolim_C(i^*E) = hocolim X (x) hocolim Y.
inline Report theorem_B_verify(const TensorPipeline& p, bool with_finality = true) {
  Report r{"theoremB", {}};
  const auto hx = diagramkit::hocolim(p.X.diagram());
  const auto hy = diagramkit::hocolim(p.Y.diagram());
  const GradedModule hcc = percomplex::homology(diagramkit::hocolim(p.XY));
  try {
    detail::compare(r, "hocolim_product", hcc, percomplex::homology(percomplex::tensor(hx, hy)));
  } catch (const Error& e) {
    r.add("hocolim_product", false, e.what());
  }
  const GradedModule hd = percomplex::homology(diagramkit::hocolim(p.E.diagram));
  detail::compare(r, "kan_extension", hd, hcc);
  const GradedModule hc = percomplex::homology(diagramkit::hocolim(p.iE.diagram()));
  detail::compare(r, "restriction", hc, hd);
  if (with_finality) {
    const auto fin = posetkit::is_homotopy_final(p.shapes.i);
    r.add("finality", fin.final, fin.summary);
  }
  return r;
}

inline Report theorem_B_verify(const CrownedDiagram& X, const CrownedDiagram& Y) {
  return theorem_B_verify(tensor_pipeline(X, Y));
}

/// Exhaustive search for conical certificates on every coslice of i : C_N -> D_N.
inline Report conical_certificates(int N, std::size_t node_budget = 5000000) {
  Report r{"conical_certificates_N" + std::to_string(N), {}};
  const auto S = posetkit::crown_shapes(N);
  for (std::size_t d = 0; d < S.d->size(); ++d) {
    const auto cs = posetkit::slice_under(S.i, d);
    const auto w = posetkit::find_conical(cs.poset, node_budget);
    r.add(S.d->label(d).str() + "/i", w.has_value() && posetkit::check_conical(cs.poset, *w),
          w ? "" : "no conical certificate (" + std::to_string(cs.poset.size()) + " elements)");
  }
  return r;
}

/// Closed forms for the two spectral sequences of E(g_n) and E(z_n), plus injectivity of g_n -> z_n.
inline Report propA_verify(const TensorPipeline& p) {
  require_hypotheses(p.X, p.Y);
  const auto& S = p.shapes;
  const int N = S.period;
  Report r{"propA", {}};
  const auto lx = check_L(p.X), ly = check_L(p.Y);
  auto z_rank = [&](const LMembership& m, long long i) { return m.lambda[slot_mod(i, N)].rows(); };
  auto b_rank = [&](const LMembership& m, long long i) { return m.lambda[slot_mod(i, N)].cols(); };
  using exactlin::FgAbelianGroup;
  auto restricted_homology = [&](const std::vector<std::size_t>& globals) {
    const auto sub = posetkit::full_subposet(*S.cc, globals);
    const auto D = p.XY.restrict(posetkit::inclusion(sub, S.cc));
    return diagramkit::category_homology(diagramkit::homology_diagram(D));
  };
  auto pad = [&](std::vector<GradedModule> h) {
    while (h.size() < 3) h.push_back(GradedModule::zero(N));
    return h;
  };
  for (int n = 0; n < N; ++n) {
    const std::string tag = "n=" + std::to_string(n);
    // closed forms
    FgAbelianGroup pushouts, zz, bb;
    for (int i = 0; i < N; ++i) {
      const int j = slot_mod(n - i, N);
      const IntMatrix& l = lx.lambda[i];
      const IntMatrix& lt = ly.lambda[j];
      const IntMatrix corner = exactlin::vstack(detail::kron(l, IntMatrix::identity(b_rank(ly, j))),
                                                IntMatrix(b_rank(lx, i) * lt.rows(), b_rank(lx, i) * lt.cols()) - detail::kron(IntMatrix::identity(b_rank(lx, i)), lt));
      pushouts = exactlin::direct_sum(pushouts, exactlin::cokernel(corner));
      zz = exactlin::direct_sum(zz, FgAbelianGroup::free(z_rank(lx, i) * z_rank(ly, j)));
      const int jb = slot_mod(n - 1 - i, N);
      bb = exactlin::direct_sum(bb, FgAbelianGroup::free(b_rank(lx, i) * b_rank(ly, jb)));
    }
    const GradedModule h0g = GradedModule::concentrated(N, n, pushouts);
    const GradedModule h1 = GradedModule::concentrated(N, n - 1, bb);
    const GradedModule h0j = GradedModule::concentrated(N, n, zz);
    const GradedModule zero = GradedModule::zero(N);

    const auto gslice = posetkit::slice_over(S.pr, S.di().gamma(n));
    const auto hg = pad(restricted_homology(gslice.embed));
    detail::compare(r, tag + " H0(pr/g)", hg[0], h0g);
    detail::compare(r, tag + " H1(pr/g)", hg[1], h1);
    for (std::size_t k = 2; k < hg.size(); ++k) detail::compare(r, tag + " H" + std::to_string(k) + "(pr/g)", hg[k], zero);

    const auto zz_ = posetkit::zigzag(S, n);
    std::vector<std::size_t> jglobal;
    for (std::size_t t : zz_.j.embed) jglobal.push_back(zz_.slice.embed[t]);
    const auto hj = pad(restricted_homology(jglobal));
    detail::compare(r, tag + " H0(J)", hj[0], h0j);
    detail::compare(r, tag + " H1(J)", hj[1], h1);
    for (std::size_t k = 2; k < hj.size(); ++k) detail::compare(r, tag + " H" + std::to_string(k) + "(J)", hj[k], zero);
    const auto hz = pad(restricted_homology(zz_.slice.embed));
    for (std::size_t k = 0; k < 3; ++k)
      detail::compare(r, tag + " H" + std::to_string(k) + "(pr/z)=H(J)", hz[k], hj[k]);

    const std::size_t g = S.di().gamma(n), z = S.di().zeta(n);
    const Homology heg(p.E.diagram.vertex_ptr(g)), hez(p.E.diagram.vertex_ptr(z));
    detail::compare(r, tag + " F(E_g)", heg.module(), GradedModule::concentrated(N, n, exactlin::direct_sum(pushouts, bb)));
    detail::compare(r, tag + " F(E_z)", hez.module(), GradedModule::concentrated(N, n, exactlin::direct_sum(zz, bb)));
    const GradedMap inc = percomplex::induced_map(p.E.diagram.map(g, z), heg, hez);
    r.add(tag + " injective", inc.is_injective(), inc.is_injective() ? "" : "kernel " + inc.kernel(n).str());
  }
  return r;
}

/// Cones of k^_n against wedges of tensor products of cones.
inline Report cones_verify(const TensorPipeline& p, bool with_counit = true) {
  require_hypotheses(p.X, p.Y);
  const auto& S = p.shapes;
  const int N = S.period;
  Report r{"cones", {}};
  const QTriple q = q_triple(p);
  r.add("Q", q.e.has_value(), q.error);
  if (!q.e) return r;
  for (int n = 0; n < N; ++n) {
    const std::string tag = "n=" + std::to_string(n);
    const GradedModule lhs = q.e->cone_h[n]->module();
    GradedModule derived = GradedModule::zero(N);
    exactlin::FgAbelianGroup closed;
    bool tensor_ok = true;
    for (int i = 0; i < N; ++i) {
      const int j = slot_mod(n - i, N);
      try {
        derived = percomplex::direct_sum(
            derived, percomplex::homology(percomplex::tensor(*q.x->cones[i].complex, *q.y->cones[j].complex)));
      } catch (const Error& e) {
        r.add(tag + " wedge", false, e.what());
        tensor_ok = false;
        break;
      }
      closed = exactlin::direct_sum(closed, exactlin::tensor(q.x->C.group(i), q.y->C.group(j)));
    }
    if (tensor_ok) detail::compare(r, tag + " wedge", lhs, derived);
    detail::compare(r, tag + " C(i*E)", lhs, GradedModule::concentrated(N, n, closed));
    if (!with_counit) continue;
    // hocolim over pr/z_n of the vertexwise counit cones is cone(k^_n)
    const std::size_t z = S.di().zeta(n);
    const auto& slice = p.E.slices[z];
    const auto& D = p.E.restricted[z];
    std::vector<std::size_t> sub;
    for (std::size_t a = 0; a < slice.embed.size(); ++a)
      if (S.d->leq(S.pr(slice.embed[a]), S.di().gamma(n - 1))) sub.push_back(a);
    const auto phi = posetkit::inclusion(posetkit::full_subposet(D.shape(), sub), D.shape_ptr());
    const auto cc = diagramkit::counit_cone(phi, D);
    detail::compare(r, tag + " counit", percomplex::homology(diagramkit::hocolim(cc.diagram)), lhs);
    for (int i = 0; i < N; ++i) {
      const int j = slot_mod(n - i, N);
      const std::size_t v = detail::local_index(slice, S.pair(S.ci().zeta(i), S.ci().zeta(j)));
      const auto pp = diagramkit::pushout_product(p.X.k(i), p.Y.k(j));
      detail::compare(r, tag + " vertex(z" + std::to_string(i) + ",z" + std::to_string(j) + ")",
                      percomplex::homology(*cc.cones[v].complex),
                      percomplex::homology(*percomplex::cone(pp.map).complex));
    }
  }
  return r;
}

/// hocofib(f) (x) hocofib(g) against hocofib(f box g).
inline Report cone_monoidal_verify(const ChainMap& f, const ChainMap& g) {
  Report r{"cone_monoidal", {}};
  const auto pp = diagramkit::pushout_product(f, g);
  try {
    detail::compare(r, "homology", percomplex::homology(*percomplex::cone(pp.map).complex),
                    percomplex::homology(percomplex::tensor(*percomplex::cone(f).complex, *percomplex::cone(g).complex)));
  } catch (const Error& e) {
    r.add("homology", false, e.what());
  }
  return r;
}

/// R(M (x) N) against R(M) (x) R(N).
inline Report main_theorem_verify(const PeriodicComplex& M, const PeriodicComplex& Nc) {
  Report r{"main", {}};
  const int s0 = calibration_shift(M.period());
  try {
    const GradedModule lhs = percomplex::homology(realize_R(percomplex::tensor(M, Nc), s0));
    const GradedModule rhs = percomplex::homology(percomplex::tensor(realize_R(M, s0), realize_R(Nc, s0)));
    detail::compare(r, "homology", lhs, rhs);
  } catch (const Error& e) {
    r.add("homology", false, e.what());
  }
  return r;
}

/// F_* R(M) = H(M), the round trip through Q, and compatibility with shifts.
inline Report calibration_verify(const PeriodicComplex& M) {
  Report r{"calibration", {}};
  const int s0 = calibration_shift(M.period());
  const GradedModule hm = percomplex::homology(M);
  detail::compare(r, "F R = H", percomplex::homology(realize_R(M, s0)), hm);
  const RoundTrip rt = round_trip(M);
  r.add("round_trip", rt.ok, rt.detail);
  detail::compare(r, "shift", percomplex::homology(realize_R(percomplex::shift(M, 1), s0)), hm.shifted(1));
  return r;
}

}  // namespace franke::realization
