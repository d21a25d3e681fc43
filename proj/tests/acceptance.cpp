// Acceptance criteria 1-8. One PASS/FAIL line per criterion, indented detail below it.
//
// Randomized corpora cycle the period through 2, 3, 4 with pinned seeds. A criterion that fails is
// accepted as an expected red only when every failing instance has one of three independently
// computed causes:
//   torsion     Tor(coker lambda_i(X), coker lambda_j(Y)) != 0, read off the recipes
//   odd tensor  N odd and the Koszul tensor is not a complex (DifferentialNotSquareZero)
//   period 2    N = 2, where i : C_2 -> D_2 is not homotopy final
// At N = 4 the outcome must match the Tor prediction in both directions. The exit status is nonzero
// when any failure is unexplained, or when a prediction of failure is contradicted.

#include "franke/realization.hpp"
#include "franke/verify/generators.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>

using namespace franke;
using namespace franke::realization;
using exactlin::FgAbelianGroup;
using percomplex::GradedModule;
using percomplex::PeriodicComplex;
using verify::build_crowned;
using verify::CrownedRecipe;
using verify::SplitMix64;

namespace {

// Corpus sizes and seeds; every comparison below is exact, so there are no numeric tolerances.
constexpr std::uint64_t corpus_seed = 20240601;
constexpr int pair_count = 200;      // criteria 2, 3
constexpr int prop_count = 100;      // criteria 4, 5
constexpr int map_pair_count = 100;  // criteria 5, 7
constexpr int complex_count = 100;   // criteria 7, 8
constexpr int max_rank = 2;
constexpr int max_entry = 3;

const char* const torsion = "pushout-product torsion";
const char* const odd_tensor = "odd-period tensor";
const char* const period_two = "period-2 degeneracy";

int period_of(int t) { return 2 + t % 3; }

bool contains(const std::string& s, const std::string& what) { return s.find(what) != std::string::npos; }
bool ends_with(const std::string& s, const std::string& what) {
  return s.size() >= what.size() && s.compare(s.size() - what.size(), what.size(), what) == 0;
}

bool tor_nonzero(const exactlin::IntMatrix& a, const exactlin::IntMatrix& b) {
  return !exactlin::tor(exactlin::cokernel(a), exactlin::cokernel(b)).is_zero();
}

bool tor_predicted(const CrownedRecipe& a, const CrownedRecipe& b) {
  for (const auto& la : a.lambda)
    for (const auto& lb : b.lambda)
      if (tor_nonzero(la, lb)) return true;
  return false;
}

struct Tally {
  int total = 0, pass = 0;
  std::map<std::string, int> explained;
  std::vector<std::string> unexplained;

  void record(bool ok, const std::string& cause, const std::string& what) {
    ++total;
    if (ok) ++pass;
    else if (!cause.empty()) ++explained[cause];
    else unexplained.push_back(what);
  }
  void contradiction(const std::string& what) { unexplained.push_back(what); }
  bool clean() const { return unexplained.empty(); }
  bool all_pass() const { return pass == total && clean(); }

  std::string str() const {
    std::ostringstream os;
    os << pass << "/" << total;
    for (const auto& [k, v] : explained) os << ", " << v << " " << k;
    if (!unexplained.empty()) os << ", " << unexplained.size() << " UNEXPLAINED";
    return os.str();
  }
};

std::string describe(const Report& r) {
  const Stage* f = r.first_failure();
  return f ? r.check + " at " + f->name + (f->detail.empty() ? "" : ": " + f->detail.substr(0, 120)) : r.check + " passed";
}

// Cause of a failing pipeline report, or "" when none of the known causes applies.
std::string classify(int N, bool tor, const Report& r) {
  const Stage* f = r.first_failure();
  if (!f) return "";
  if (N % 2 == 1 && contains(f->detail, "DifferentialNotSquareZero")) return odd_tensor;
  if (tor && (f->name == "membership" || f->name == "Q" || ends_with(f->name, "injective"))) return torsion;
  if (N == 2 && (f->name == "membership" || f->name == "Q" || f->name == "finality" || f->name == "restriction" ||
                 ends_with(f->name, "H0(pr/z)=H(J)")))
    return period_two;
  return "";
}

class Criteria {
 public:
  void line(int id, const std::string& title, bool pass, bool explained, const std::string& detail) {
    std::printf("%s  criterion %d  %s: %s%s\n", pass ? "PASS" : "FAIL", id, title.c_str(), detail.c_str(),
                pass ? "" : (explained ? "  [expected red, all failures explained]" : "  [UNEXPLAINED]"));
    if (!pass && !explained) ok_ = false;
  }
  static void note(const std::string& s) { std::printf("      %s\n", s.c_str()); }
  static void list(const Tally& t) {
    for (std::size_t k = 0; k < t.unexplained.size() && k < 5; ++k) note("unexplained: " + t.unexplained[k]);
  }
  bool ok() const { return ok_; }

 private:
  bool ok_ = true;
};

struct PairInstance {
  int N;
  CrownedRecipe rx, ry;
  CrownedDiagram X, Y;
  bool tor;
  std::optional<TensorPipeline> pipeline;
  std::string pipeline_error;
};

std::vector<PairInstance> pair_corpus() {
  const SplitMix64 root(corpus_seed);
  std::vector<PairInstance> out;
  for (int t = 0; t < pair_count; ++t) {
    SplitMix64 r = root.fork(static_cast<std::uint64_t>(t));
    const int N = period_of(t);
    PairInstance in{N, verify::random_recipe(r, N, max_rank, max_entry), verify::random_recipe(r, N, max_rank, max_entry),
                    {}, {}, false, std::nullopt, {}};
    in.X = build_crowned(in.rx);
    in.Y = build_crowned(in.ry);
    in.tor = tor_predicted(in.rx, in.ry);
    try {
      in.pipeline = tensor_pipeline(in.X, in.Y);
    } catch (const Error& e) {
      in.pipeline_error = e.what();
    }
    out.push_back(std::move(in));
  }
  return out;
}

template <class F>
Report guarded(const std::string& name, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    Report r{name, {}};
    r.add("error", false, e.what());
    return r;
  }
}

Report on_pipeline(const PairInstance& in, const std::string& name, const std::function<Report(const TensorPipeline&)>& f) {
  if (!in.pipeline) {
    Report r{name, {}};
    r.add("pipeline", false, in.pipeline_error);
    return r;
  }
  return guarded(name, [&] { return f(*in.pipeline); });
}

// Records a pipeline check and enforces the two-sided Tor prediction at N = 4.
void record_pair(Tally& t, const PairInstance& in, int idx, const Report& r, bool torsion_breaks_it) {
  const std::string what = "instance " + std::to_string(idx) + " N=" + std::to_string(in.N) + ": " + describe(r);
  t.record(r.pass(), classify(in.N, in.tor, r), what);
  if (in.N == 4 && r.pass() && in.tor && torsion_breaks_it) t.contradiction("Tor predicted a failure, " + what);
}

// ---- criterion 1 ----
void criterion1(Criteria& c) {
  const int N = 2;
  const PeriodicComplex M = moore_complex(N, 3);
  const GradedModule z3z3(N, {FgAbelianGroup(0, {3}), FgAbelianGroup(0, {3})});
  std::vector<std::pair<std::string, bool>> checks;
  // oracle: determinantal divisors of the tensor square, independent of the homology engine
  const PeriodicComplex MM = percomplex::tensor(M, M);
  checks.emplace_back("oracle H(M (x) M) = (Z/3, Z/3)", oracle::homology_oracle(MM) == z3z3);
  const QOutput q = Q(moore_fixture(N, 3));
  checks.emplace_back("Q exact", sequence_exact(q));
  checks.emplace_back("Q(moore) = Moore(3)", percomplex::homology(*q.complex) == oracle::homology_oracle(M));
  checks.emplace_back("round trip", round_trip(M).ok);
  const int s0 = calibration_shift(N);
  const GradedModule lhs = percomplex::homology(realize_R(MM, s0));
  const GradedModule rhs = percomplex::homology(percomplex::tensor(realize_R(M, s0), realize_R(M, s0)));
  checks.emplace_back("H R(M (x) M) = (Z/3, Z/3)", lhs == z3z3);
  checks.emplace_back("H (R(M) (x) R(M)) = (Z/3, Z/3)", rhs == z3z3);
  checks.emplace_back("main theorem verifier", main_theorem_verify(M, M).pass());
  bool all = true;
  std::string failed;
  for (const auto& [name, ok] : checks)
    if (!ok) {
      all = false;
      failed += " " + name + ";";
    }
  c.line(1, "Moore(3) end to end, N=2", all, false,
         all ? std::to_string(checks.size()) + "/" + std::to_string(checks.size()) + " checks" : "failed:" + failed);
}

// ---- criteria 2, 3, 4, 5 on the shared pair corpus ----
void pair_criteria(Criteria& c, const std::vector<PairInstance>& corpus) {
  Tally a, b, p, cones;
  for (int t = 0; t < pair_count; ++t) {
    const auto& in = corpus[t];
    try {
      require_hypotheses(in.X, in.Y);
    } catch (const Error& e) {
      a.contradiction("instance " + std::to_string(t) + " violates the hypotheses: " + e.what());
      continue;
    }
    record_pair(a, in, t, on_pipeline(in, "theoremA", [](const TensorPipeline& pp) { return theorem_A_verify(pp); }), true);
    record_pair(b, in, t, on_pipeline(in, "theoremB", [](const TensorPipeline& pp) { return theorem_B_verify(pp); }), false);
    if (t < prop_count) {
      record_pair(p, in, t, on_pipeline(in, "propA", [](const TensorPipeline& pp) { return propA_verify(pp); }), true);
      record_pair(cones, in, t, on_pipeline(in, "cones", [](const TensorPipeline& pp) { return cones_verify(pp); }), true);
    }
  }
  // Theorem B is recorded without a torsion excuse, so any failure at N = 4 stays unexplained

  c.line(2, "Theorem A, " + std::to_string(pair_count) + " pairs", a.all_pass(), a.clean(), a.str());
  Criteria::list(a);

  // conical certificates for every coslice of i, N = 2..6
  Tally cert;
  for (int N = 2; N <= 6; ++N) {
    const auto S = posetkit::crown_shapes(N);
    for (std::size_t d = 0; d < S.d->size(); ++d) {
      const auto cs = posetkit::slice_under(S.i, d).poset;
      const auto w = posetkit::find_conical(cs, 5000000);
      const bool ok = w && posetkit::check_conical(cs, *w);
      std::string cause;
      if (!ok) {
        const auto v = posetkit::classify_contractibility(cs);
        if (N >= 3 && v.kind == posetkit::Contractibility::dismantlable) cause = "dismantlable, not conical";
        if (N == 2 && v.kind == posetkit::Contractibility::not_contractible) cause = period_two;
      }
      cert.record(ok, cause, "N=" + std::to_string(N) + " " + S.d->label(d).str() + "/i");
    }
  }
  Tally fin;
  for (int N = 3; N <= 6; ++N) {
    const auto r = posetkit::is_homotopy_final(posetkit::crown_shapes(N).i);
    fin.record(r.final, "", "N=" + std::to_string(N) + " " + r.summary);
  }
  const bool b_pass = b.all_pass() && cert.all_pass() && fin.all_pass();
  c.line(3, "Theorem B, " + std::to_string(pair_count) + " pairs + coslice certificates", b_pass,
         b.clean() && cert.clean() && fin.clean(), "stages " + b.str() + "; conical " + cert.str());
  Criteria::note("homotopy finality of i for N=3..6 by dismantling: " + fin.str());
  Criteria::list(b);
  Criteria::list(cert);
  Criteria::list(fin);

  c.line(4, "Prop. A, " + std::to_string(prop_count) + " instances", p.all_pass(), p.clean(), p.str());
  Criteria::list(p);

  // cone monoidality on random map pairs
  Tally mono;
  const SplitMix64 root(corpus_seed ^ 0xC0E5);
  for (int t = 0; t < map_pair_count; ++t) {
    SplitMix64 r = root.fork(static_cast<std::uint64_t>(t));
    const int N = period_of(t);
    const ChainMap f = verify::random_chain_map(r, N, max_rank, max_entry);
    const ChainMap g = verify::random_chain_map(r, N, max_rank, max_entry);
    const Report rep = guarded("cone_monoidal", [&] { return cone_monoidal_verify(f, g); });
    mono.record(rep.pass(), classify(N, false, rep), "pair " + std::to_string(t) + " N=" + std::to_string(N) + ": " + describe(rep));
  }
  c.line(5, "cones of k^ and cone monoidality", cones.all_pass() && mono.all_pass(), cones.clean() && mono.clean(),
         "cones " + cones.str() + "; hocofib " + mono.str());
  Criteria::list(cones);
  Criteria::list(mono);
}

// ---- criterion 6 ----
void criterion6(Criteria& c) {
  Tally t, four;
  for (int N : {2, 3})
    for (int s = 0; s < N; ++s)
      for (int u = 0; u < N; ++u) {
        const Report r = guarded("disks", [&] { return disks_differential_verify(N, s, u); });
        const Stage* f = r.first_failure();
        std::string cause;
        if (f && N == 2 && f->name == "Q" && contains(f->detail, "NotInL")) cause = period_two;
        if (f && N == 3 && contains(f->detail, "DifferentialNotSquareZero")) cause = odd_tensor;
        t.record(r.pass(), cause, "N=" + std::to_string(N) + " (s,t)=(" + std::to_string(s) + "," + std::to_string(u) + "): " + describe(r));
      }
  for (int s = 0; s < 4; ++s)
    for (int u = 0; u < 4; ++u) {
      const Report r = guarded("disks", [&] { return disks_differential_verify(4, s, u); });
      four.record(r.pass(), "", "N=4 (s,t)=(" + std::to_string(s) + "," + std::to_string(u) + "): " + describe(r));
    }
  c.line(6, "disk differentials, N=2,3", t.all_pass(), t.clean() && four.all_pass(), t.str());
  Criteria::note("supplementary N=4: " + four.str());
  Criteria::list(t);
  Criteria::list(four);
}

// ---- criterion 7 ----
void criterion7(Criteria& c, const std::vector<PairInstance>& corpus) {
  Tally h0, inv, kan, kun, pp, diag;
  for (int t = 0; t < pair_count; ++t) {
    const auto& in = corpus[t];
    const std::string id = "instance " + std::to_string(t) + " N=" + std::to_string(in.N) + ": ";
    for (const auto* X : {&in.X, &in.Y}) {
      const Report r = guarded("h0", [&] { return h0_colimit_verify(X->diagram()); });
      h0.record(r.pass(), "", id + describe(r));
    }
    if (t < complex_count) {
      SplitMix64 r = SplitMix64(in.rx.seed ^ in.ry.seed);
      std::vector<std::vector<int>> tops(in.X.diagram().shape().size());
      for (auto& v : tops) v.push_back(static_cast<int>(r.uniform(0, in.N - 1)));
      const Report ri = guarded("invariance", [&] { return hocolim_invariance_verify(in.X.diagram(), tops); });
      inv.record(ri.pass(), "", id + describe(ri));
      const auto S = posetkit::crown_shapes(in.N);
      const Report rk = guarded("kan", [&] { return kan_preservation_verify(S.i, in.X.diagram()); });
      kan.record(rk.pass(), "", id + describe(rk));
      if (in.pipeline) {
        const Report rp = guarded("kan", [&] { return kan_preservation_verify(S.pr, in.pipeline->XY); });
        kan.record(rp.pass(), "", id + "along pr: " + describe(rp));
      }
    }
  }
  const SplitMix64 root(corpus_seed ^ 0xF0DA);
  for (int t = 0; t < complex_count; ++t) {
    SplitMix64 r = root.fork(static_cast<std::uint64_t>(t));
    const int N = period_of(t);
    const std::string id = "N=" + std::to_string(N) + " #" + std::to_string(t) + ": ";
    const PeriodicComplex X = verify::generate_twisted(r.next(), N, max_rank, max_entry);
    const PeriodicComplex Y = verify::generate_twisted(r.next(), N, max_rank, max_entry);
    const Report rk = guarded("kunneth", [&] { return kunneth_verify(X, Y); });
    kun.record(rk.pass(), classify(N, false, rk), id + describe(rk));
    const Report rd = guarded("diagonal", [&] { return diagonal_verify(X); });
    diag.record(rd.pass(), "", id + describe(rd));
  }
  const SplitMix64 mroot(corpus_seed ^ 0x9917);
  for (int t = 0; t < map_pair_count; ++t) {
    SplitMix64 r = mroot.fork(static_cast<std::uint64_t>(t));
    const int N = period_of(t);
    const ChainMap f = verify::random_mono(r, N, max_rank, max_entry);
    const ChainMap g = verify::random_mono(r, N, max_rank, max_entry);
    const bool tor = tor_nonzero(f.block(0).to_dense(), g.block(0).to_dense());
    const Report rp = guarded("ppinjective", [&] { return ppinjective_verify(f, g); });
    const std::string id = "pair " + std::to_string(t) + " N=" + std::to_string(N) + ": ";
    // a failure is explained only when the kernel was identified as the nonzero Tor term
    const bool kernel_is_tor = !rp.stages.empty() && rp.stages[0].name == "kernel = Tor" && rp.stages[0].pass;
    pp.record(rp.pass(), (tor && kernel_is_tor) ? torsion : "", id + describe(rp));
    if (rp.pass() && tor) pp.contradiction(id + "Tor is nonzero but the map is injective");
  }
  const bool pass = h0.all_pass() && inv.all_pass() && kan.all_pass() && kun.all_pass() && pp.all_pass() && diag.all_pass();
  const bool clean = h0.all_pass() && inv.all_pass() && kan.all_pass() && diag.all_pass() && kun.clean() && pp.clean();
  c.line(7, "foundational identities", pass, clean,
         "H0=colim " + h0.str() + "; invariance " + inv.str() + "; Kan " + kan.str() + "; Kunneth " + kun.str() +
             "; pp mono " + pp.str() + "; diagonal " + diag.str());
  for (const Tally* t : {&h0, &inv, &kan, &kun, &pp, &diag}) Criteria::list(*t);
}

// ---- criterion 8 ----
void criterion8(Criteria& c) {
  Tally cal, stable;
  std::map<int, int> shifts;
  for (int N : {2, 3, 4}) shifts[N] = calibration_shift(N);
  const SplitMix64 root(corpus_seed ^ 0xCA11);
  for (int t = 0; t < complex_count; ++t) {
    SplitMix64 r = root.fork(static_cast<std::uint64_t>(t));
    const int N = period_of(t);
    const PeriodicComplex M = verify::generate_twisted(r.next(), N, 3, max_entry);
    const std::string id = "N=" + std::to_string(N) + " #" + std::to_string(t) + ": ";
    const Report rc = guarded("calibration", [&] { return calibration_verify(M); });
    cal.record(rc.pass(), "", id + describe(rc));
    // the calibration constant read off this instance alone must agree with the global one
    const GradedModule h = oracle::homology_oracle(M);
    const GradedModule raw = percomplex::homology(realize_R(M, 0));
    std::vector<int> fits;
    for (int k = 0; k < N; ++k)
      if (raw.shifted(k) == h) fits.push_back(k);
    const bool ok = std::find(fits.begin(), fits.end(), shifts[N]) != fits.end();
    stable.record(ok, "", id + "shift " + std::to_string(shifts[N]) + " does not fit");
  }
  // other seeds of the unit give the same constant
  for (int N : {2, 3, 4})
    for (std::uint64_t seed : {1u, 99u, 12345u}) {
      const PeriodicComplex M = verify::generate_twisted(seed, N, 2, 2);
      stable.record(percomplex::homology(realize_R(M, shifts[N])) == percomplex::homology(M), "",
                    "seed " + std::to_string(seed) + " N=" + std::to_string(N));
    }
  std::string s;
  for (const auto& [N, k] : shifts) s += " N=" + std::to_string(N) + ":" + std::to_string(k);
  c.line(8, "calibration F R = H", cal.all_pass() && stable.all_pass(), false,
         "F R = H " + cal.str() + "; constant stable " + stable.str() + "; shift" + s);
  Criteria::list(cal);
  Criteria::list(stable);
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  Criteria c;
  criterion1(c);
  const auto corpus = pair_corpus();
  pair_criteria(c, corpus);
  criterion6(c);
  criterion7(c, corpus);
  criterion8(c);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("acceptance finished in %.1f s; %s\n", secs,
              c.ok() ? "every failure is explained" : "some failures are UNEXPLAINED");
  return c.ok() ? 0 : 1;
}
