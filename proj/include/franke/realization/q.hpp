#pragma once

#include "franke/realization/crowned.hpp"

#include <memory>
#include <string>
#include <vector>

namespace franke::realization {

using exactlin::Presentation;
using exactlin::SparseVec;

/// Outcome of the membership test for the subcategory L, with the homology data it computed.
struct LMembership {
  bool member = false;
  std::string failure;
  std::vector<std::shared_ptr<const Homology>> beta_h, zeta_h;
  std::vector<IntMatrix> lambda;  // lambda[i] : B^(i) -> Z^(i) on canonical generators

  explicit operator bool() const { return member; }
};

namespace detail {

inline IntMatrix coordinates_matrix(const Homology& h, long long n, const std::vector<SparseVec>& vs) {
  IntMatrix m(h.group(n).num_generators(), vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j) {
    const auto c = h.coordinates(n, vs[j]);
    for (std::size_t i = 0; i < c.size(); ++i) m(i, j) = c[i];
  }
  return m;
}

inline std::vector<SparseVec> apply_all(const SparseMatrix& f, const std::vector<SparseVec>& vs) {
  std::vector<SparseVec> out;
  for (const auto& v : vs) out.push_back(f.apply(v));
  return out;
}

// Which slot holds nonzero homology other than `slot`, or -1.
inline int stray_slot(const GradedModule& m, int slot) {
  for (int n = 0; n < m.period(); ++n)
    if (n != slot && !m.group(n).is_zero()) return n;
  return -1;
}

}  // namespace detail

/// Vertex homology of b_i and z_i concentrated in slot i, and H_i(l_i) injective.
inline LMembership check_L(const CrownedDiagram& X) {
  const int N = X.period();
  LMembership r;
  for (int i = 0; i < N; ++i) {
    r.beta_h.push_back(std::make_shared<const Homology>(X.beta_ptr(i)));
    r.zeta_h.push_back(std::make_shared<const Homology>(X.zeta_ptr(i)));
  }
  auto fail_with = [&](std::string why) {
    r.member = false;
    r.failure = std::move(why);
    return r;
  };
  for (int i = 0; i < N; ++i) {
    const std::string si = std::to_string(i);
    if (int s = detail::stray_slot(r.beta_h[i]->module(), i); s >= 0)
      return fail_with("vertex b" + si + " has homology in slot " + std::to_string(s));
    if (int s = detail::stray_slot(r.zeta_h[i]->module(), i); s >= 0)
      return fail_with("vertex z" + si + " has homology in slot " + std::to_string(s));
  }
  for (int i = 0; i < N; ++i) {
    const auto& hb = *r.beta_h[i];
    const auto& hz = *r.zeta_h[i];
    IntMatrix lam = detail::coordinates_matrix(hz, i, detail::apply_all(X.l(i).block(i), hb.generators(i)));
    const GradedMap one(1, 0, {hb.presentation(i)}, {hz.presentation(i)}, {lam});
    r.lambda.push_back(std::move(lam));
    if (!one.is_injective_at(0))
      return fail_with("H(l_" + std::to_string(i) + ") is not injective in slot " + std::to_string(i));
  }
  r.member = true;
  return r;
}

/// The twisted complex (C, d) of a diagram in L, with the pieces of its construction.
struct QOutput {
  ComplexPtr complex;
  GradedModule Z, B, C;
  GradedMap lambda;  // B -> Z
  GradedMap iota;    // Z -> C
  GradedMap rho;     // C -> B, lowering the slot by one
  std::vector<percomplex::Cone> cones;                    // cone(k_i)
  std::vector<std::shared_ptr<const Homology>> cone_h;  // C^(i) = H_i(cone(k_i))
  LMembership membership;
};

/// C^(i) = H(cone k_i), d = iota lambda rho. Requires free C^(i).
inline QOutput Q(const CrownedDiagram& X) {
  const int N = X.period();
  QOutput q;
  q.membership = check_L(X);
  require(q.membership.member, ErrorKind::not_in_L, q.membership.failure);
  const auto& hb = q.membership.beta_h;
  const auto& hz = q.membership.zeta_h;
  std::vector<IntMatrix> iota(N), rho(N);
  std::vector<Presentation> pz(N), pb(N), pc(N);
  for (int i = 0; i < N; ++i) {
    q.cones.push_back(percomplex::cone(X.k(i)));
    q.cone_h.push_back(std::make_shared<const Homology>(q.cones.back().complex));
    const auto& hc = *q.cone_h.back();
    const std::string si = std::to_string(i);
    if (int s = detail::stray_slot(hc.module(), i); s >= 0)
      fail(ErrorKind::degeneration_failure, "H(cone k_" + si + ") is nonzero in slot " + std::to_string(s));
    require(hc.group(i).is_free(), ErrorKind::not_free, "C^(" + si + ") has torsion");
    pz[i] = hz[i]->presentation(i);
    pb[i] = hb[i]->presentation(i);
    pc[i] = hc.presentation(i);
    iota[i] = detail::coordinates_matrix(hc, i, detail::apply_all(q.cones.back().incl.block(i), hz[i]->generators(i)));
    // rho reads the X(b_{i-1}) part of a cone cycle
    const auto& hbp = *hb[slot_mod(i - 1, N)];
    std::vector<SparseVec> parts;
    for (const auto& g : hc.generators(i)) parts.push_back(q.cones.back().bdry.block(i).apply(g));
    rho[i] = detail::coordinates_matrix(hbp, i - 1, parts);
  }
  q.Z = GradedModule(N, [&] {
    std::vector<exactlin::FgAbelianGroup> g;
    for (const auto& p : pz) g.push_back(p.group());
    return g;
  }());
  q.B = GradedModule(N, [&] {
    std::vector<exactlin::FgAbelianGroup> g;
    for (const auto& p : pb) g.push_back(p.group());
    return g;
  }());
  q.C = GradedModule(N, [&] {
    std::vector<exactlin::FgAbelianGroup> g;
    for (const auto& p : pc) g.push_back(p.group());
    return g;
  }());
  q.lambda = GradedMap(N, 0, pb, pz, q.membership.lambda);
  q.iota = GradedMap(N, 0, pz, pc, iota);
  q.rho = GradedMap(N, -1, pc, pb, rho);
  std::vector<std::size_t> ranks(N);
  std::vector<IntMatrix> d(N);
  for (int i = 0; i < N; ++i) ranks[i] = pc[i].generators;
  for (int i = 0; i < N; ++i) {
    const int j = slot_mod(i - 1, N);
    d[i] = iota[j] * q.membership.lambda[j] * rho[i];
  }
  q.complex = percomplex::share(PeriodicComplex::from_dense(N, ranks, d));
  return q;
}

/// 0 -> Z -> C -> B[1] -> 0 exact in every slot.
inline bool sequence_exact(const QOutput& q) {
  return q.iota.is_injective() && q.rho.is_surjective() && percomplex::exact(q.iota, q.rho);
}

/// Split realization of a degreewise free twisted complex M: spheres with k_i = 0.
struct QInverse {
  CrownedDiagram diagram;
  std::vector<IntMatrix> kernel;      // K_i: basis of ker d_i in M_i
  std::vector<IntMatrix> complement;  // S_i: columns completing K_i to a basis, d_i S_i a basis of im d_i
};

inline QInverse Q_inverse(const PeriodicComplex& M) {
  const int N = M.period();
  require(N >= 2, ErrorKind::period_mismatch, "realization needs period at least 2");
  QInverse out;
  std::vector<exactlin::SmithForm> sf;
  for (int i = 0; i < N; ++i) {
    sf.push_back(exactlin::smith_normal_form(M.d(i).to_dense()));
    const std::size_t r = sf.back().rank();
    out.kernel.push_back(sf.back().v.cols_range(r, M.rank(i) - r));
    out.complement.push_back(sf.back().v.cols_range(0, r));
  }
  std::vector<IntMatrix> lambdas(N);
  for (int j = 0; j < N; ++j) {
    const int i = slot_mod(j + 1, N);
    const IntMatrix img = M.d(i).to_dense() * out.complement[i];
    const std::size_t r = sf[j].rank();
    lambdas[j] = (sf[j].v_inv * img).rows_range(r, M.rank(j) - r);
  }
  out.diagram = sphere_crowned(N, lambdas);
  return out;
}

/// Explicit isomorphism Q(Q_inverse(M)) -> M, slot by slot.
struct RoundTrip {
  bool ok = false;
  std::string detail;
  std::vector<IntMatrix> iso;
};

inline RoundTrip round_trip(const PeriodicComplex& M) {
  const int N = M.period();
  RoundTrip rt;
  const QInverse qi = Q_inverse(M);
  const QOutput q = Q(qi.diagram);
  for (int i = 0; i < N; ++i) {
    const auto& hc = *q.cone_h[i];
    const IntMatrix basis = exactlin::hstack(qi.kernel[i], qi.complement[i]);
    IntMatrix g(basis.cols(), hc.generators(i).size());
    for (std::size_t j = 0; j < g.cols(); ++j)
      for (const auto& [a, x] : hc.generators(i)[j]) g(a, j) = x;
    rt.iso.push_back(basis * g);
    if (!exactlin::is_unimodular(rt.iso.back())) {
      rt.detail = "slot " + std::to_string(i) + ": comparison map is not invertible";
      return rt;
    }
  }
  for (int i = 0; i < N; ++i)
    if (M.d(i).to_dense() * rt.iso[i] != rt.iso[slot_mod(i - 1, N)] * q.complex->d(i).to_dense()) {
      rt.detail = "slot " + std::to_string(i) + ": comparison map does not commute with d";
      return rt;
    }
  rt.ok = true;
  return rt;
}

/// Slot of the homology of hocolim over the crown of the unit, negated: the global offset of R.
inline int calibration_shift(int N) {
  const QInverse qi = Q_inverse(PeriodicComplex::concentrated(N, 0, 1));
  const GradedModule h = percomplex::homology(diagramkit::hocolim(qi.diagram.diagram()));
  int slot = -1;
  for (int n = 0; n < N; ++n)
    if (!h.group(n).is_zero()) {
      require(slot < 0 && h.group(n) == exactlin::FgAbelianGroup::free(1), ErrorKind::verification_failure,
              "unit realization is not a single Z");
      slot = n;
    }
  require(slot >= 0, ErrorKind::verification_failure, "unit realization is acyclic");
  return slot_mod(-slot, N);
}

/// hocolim of the split realization, moved by the calibration shift.
inline PeriodicComplex realize_R(const PeriodicComplex& M, int s0) {
  return percomplex::shift(diagramkit::hocolim(Q_inverse(M).diagram.diagram()), s0);
}

inline PeriodicComplex realize_R(const PeriodicComplex& M) { return realize_R(M, calibration_shift(M.period())); }

/// Homology of a twisted complex.
inline GradedModule twisted_homology(const PeriodicComplex& M) { return percomplex::homology(M); }

/// Moore(p): Z in slot 1 mapping by p onto Z in slot 0.
inline PeriodicComplex moore_complex(int N = 2, long long p = 3) {
  std::vector<std::size_t> ranks(N, 0);
  ranks[0] = ranks[1] = 1;
  std::vector<SparseMatrix> d;
  for (int n = 0; n < N; ++n) d.emplace_back(ranks[slot_mod(n - 1, N)], ranks[n]);
  d[1].add(0, 0, p);
  return PeriodicComplex(N, ranks, std::move(d));
}

}  // namespace franke::realization
