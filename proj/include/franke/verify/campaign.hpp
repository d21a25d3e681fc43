#pragma once

#include "franke/realization/foundational.hpp"
#include "franke/verify/io.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <set>

namespace franke::verify {

using realization::Report;

inline constexpr const char* engine_version = "1.0.0";

/// Check names accepted by campaigns, in report order.
inline const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names{
      "theoremA", "theoremB", "propA",      "cones",         "disks",      "main",     "finality",
      "kunneth",  "calibration", "ppinjective", "cone_monoidal", "diagonal", "foundational"};
  return names;
}

struct CampaignConfig {
  std::uint64_t seed = 1;
  int period = 2;
  int max_rank = 2;
  int max_entry = 3;
  int trials = 10;
  std::vector<std::string> checks{"theoremA"};
  bool split = false;  // restrict lambda to free cokernel
  int jobs = 1;
  int shrink_budget = 200;

  void validate() const {
    require(trials >= 1, ErrorKind::parse_error, "trials must be at least 1");
    require(period >= 2, ErrorKind::parse_error, "period must be at least 2");
    require(max_rank >= 0 && max_entry >= 0, ErrorKind::parse_error, "sizes must be non-negative");
    require(!checks.empty(), ErrorKind::parse_error, "no checks selected");
    for (const auto& c : checks)
      require(std::find(known_checks().begin(), known_checks().end(), c) != known_checks().end(), ErrorKind::parse_error,
              "unknown check \"" + c + "\"");
  }
};

/// One instance of one check, carried as its serialized payload so that it replays verbatim.
struct Instance {
  std::string check;
  json payload;
};

namespace detail {

inline Report error_report(const std::string& check, const std::string& stage, const std::string& what) {
  Report r{check, {}};
  r.add(stage, false, what);
  return r;
}

inline void absorb(Report& into, const Report& r, const std::string& prefix) {
  for (const auto& s : r.stages) into.add(prefix + s.name, s.pass, s.detail);
}

inline json pair_payload(const CrownedRecipe& x, const CrownedRecipe& y) { return json{{"x", to_json(x)}, {"y", to_json(y)}}; }

inline std::pair<CrownedRecipe, CrownedRecipe> read_pair(const json& p) {
  return {recipe_from_json(io::field(p, "", "x"), nullptr, "x"), recipe_from_json(io::field(p, "", "y"), nullptr, "y")};
}

inline Report run_pair_check(const std::string& check, const json& payload) {
  const auto [rx, ry] = read_pair(payload);
  const CrownedDiagram X = build_crowned(rx), Y = build_crowned(ry);
  realization::TensorPipeline p;
  try {
    p = realization::tensor_pipeline(X, Y);
  } catch (const Error& e) {
    return error_report(check, "pipeline", e.what());
  }
  if (check == "theoremA") return realization::theorem_A_verify(p);
  if (check == "theoremB") return realization::theorem_B_verify(p);
  if (check == "propA") return realization::propA_verify(p);
  if (check == "cones") return realization::cones_verify(p);
  // foundational identities on the instance's diagrams
  Report r{"foundational", {}};
  absorb(r, realization::h0_colimit_verify(X.diagram()), "X ");
  absorb(r, realization::h0_colimit_verify(p.XY), "XY ");
  std::vector<std::vector<int>> tops(X.diagram().shape().size());
  SplitMix64 rng(rx.seed ^ ry.seed);
  for (auto& t : tops)
    if (rng.chance(1, 2)) t.push_back(static_cast<int>(rng.uniform(0, X.period() - 1)));
  absorb(r, realization::hocolim_invariance_verify(X.diagram(), tops), "X ");
  absorb(r, realization::kan_preservation_verify(p.shapes.i, X.diagram()), "i ");
  absorb(r, realization::kan_preservation_verify(p.shapes.pr, p.XY), "pr ");
  return r;
}

}  // namespace detail

/// Runs one check on one payload. Library errors become a failing "error" stage.
inline Report run_check(const Instance& in) {
  const std::string& c = in.check;
  const json& p = in.payload;
  try {
    if (c == "theoremA" || c == "theoremB" || c == "propA" || c == "cones" || c == "foundational")
      return detail::run_pair_check(c, p);
    if (c == "disks") {
      return realization::disks_differential_verify(
          static_cast<int>(io::read_small(io::field(p, "", "period"), "period", 2, 64)),
          io::read_small(io::field(p, "", "s"), "s", 0, 63), io::read_small(io::field(p, "", "t"), "t", 0, 63),
          static_cast<std::size_t>(io::read_small(io::field(p, "", "ls"), "ls", 0, 16)),
          static_cast<std::size_t>(io::read_small(io::field(p, "", "mt"), "mt", 0, 16)));
    }
    if (c == "finality") {
      const int N = static_cast<int>(io::read_small(io::field(p, "", "period"), "period", 2, 64));
      const auto fin = posetkit::is_homotopy_final(posetkit::crown_shapes(N).i);
      Report r{"finality", {}};
      r.add("i final", fin.final, fin.summary);
      return r;
    }
    if (c == "main" || c == "kunneth" || c == "calibration" || c == "diagonal") {
      const PeriodicComplex M = complex_from_json(io::field(p, "", "m"), nullptr, "m");
      if (c == "calibration") return realization::calibration_verify(M);
      if (c == "diagonal") return realization::diagonal_verify(M);
      const PeriodicComplex Nc = complex_from_json(io::field(p, "", "n"), nullptr, "n");
      return c == "main" ? realization::main_theorem_verify(M, Nc) : realization::kunneth_verify(M, Nc);
    }
    if (c == "ppinjective" || c == "cone_monoidal") {
      const ChainMap f = chain_map_from_json(io::field(p, "", "f"), nullptr, "f");
      const ChainMap g = chain_map_from_json(io::field(p, "", "g"), nullptr, "g");
      return c == "ppinjective" ? realization::ppinjective_verify(f, g) : realization::cone_monoidal_verify(f, g);
    }
    if (c == "fixture") {
      const PeriodicComplex M = complex_from_json(io::field(p, "", "complex"), nullptr, "complex");
      const GradedModule expect = module_from_json(io::field(p, "", "expected"), nullptr, "expected");
      Report r{"fixture", {}};
      const auto q = realization::Q(realization::Q_inverse(M).diagram);
      r.add("Q sequence exact", realization::sequence_exact(q));
      const auto rt = realization::round_trip(M);
      r.add("round_trip", rt.ok, rt.detail);
      const int s0 = realization::calibration_shift(M.period());
      realization::detail::compare(r, "F R = H", percomplex::homology(realization::realize_R(M, s0)), percomplex::homology(M));
      detail::absorb(r, realization::main_theorem_verify(M, M), "main ");
      realization::detail::compare(r, "R(M (x) M) oracle",
                                   percomplex::homology(realization::realize_R(percomplex::tensor(M, M), s0)), expect);
      realization::detail::compare(
          r, "R(M) (x) R(M) oracle",
          percomplex::homology(percomplex::tensor(realization::realize_R(M, s0), realization::realize_R(M, s0))), expect);
      return r;
    }
  } catch (const Error& e) {
    return detail::error_report(c, "error", e.what());
  }
  fail(ErrorKind::parse_error, "unknown check \"" + c + "\"");
}

/// Instance of `check` for trial `t`. Checks of the same family share their trial stream,
/// so theoremA, theoremB, propA, cones and foundational see the same corpus.
inline Instance make_instance(const CampaignConfig& cfg, const std::string& check, int t) {
  const SplitMix64 trial = SplitMix64(cfg.seed).fork(static_cast<std::uint64_t>(t));
  const int N = cfg.period;
  Instance in{check, {}};
  if (check == "theoremA" || check == "theoremB" || check == "propA" || check == "cones" || check == "foundational") {
    SplitMix64 r = trial.fork(0);
    const CrownedRecipe x = random_recipe(r, N, cfg.max_rank, cfg.max_entry, cfg.split);
    const CrownedRecipe y = random_recipe(r, N, cfg.max_rank, cfg.max_entry, cfg.split);
    in.payload = detail::pair_payload(x, y);
  } else if (check == "disks") {
    SplitMix64 r = trial.fork(4);
    in.payload = json{{"period", N}, {"s", r.uniform(0, N - 1)}, {"t", r.uniform(0, N - 1)},
                      {"ls", r.uniform(1, std::max(1, cfg.max_rank))}, {"mt", r.uniform(1, std::max(1, cfg.max_rank))}};
  } else if (check == "finality") {
    in.payload = json{{"period", N}};
  } else if (check == "main" || check == "kunneth" || check == "calibration" || check == "diagonal") {
    SplitMix64 r = trial.fork(1);
    const auto sm = r.next(), sn = r.next();
    in.payload = json{{"m", to_json(generate_twisted(sm, N, cfg.max_rank, cfg.max_entry))},
                      {"n", to_json(generate_twisted(sn, N, cfg.max_rank, cfg.max_entry))},
                      {"generator", {{"m_seed", std::to_string(sm)}, {"n_seed", std::to_string(sn)}, {"max_rank", cfg.max_rank}, {"max_entry", cfg.max_entry}}}};
  } else if (check == "ppinjective") {
    SplitMix64 r = trial.fork(2);
    const ChainMap f = random_mono(r, N, std::max(1, cfg.max_rank), std::max(1, cfg.max_entry));
    const ChainMap g = random_mono(r, N, std::max(1, cfg.max_rank), std::max(1, cfg.max_entry));
    in.payload = json{{"f", to_json(f)}, {"g", to_json(g)}};
  } else if (check == "cone_monoidal") {
    SplitMix64 r = trial.fork(3);
    const ChainMap f = random_chain_map(r, N, cfg.max_rank, cfg.max_entry);
    const ChainMap g = random_chain_map(r, N, cfg.max_rank, cfg.max_entry);
    in.payload = json{{"f", to_json(f)}, {"g", to_json(g)}};
  } else {
    fail(ErrorKind::parse_error, "unknown check \"" + check + "\"");
  }
  return in;
}

namespace detail {

inline std::string failing_stage(const Report& r) {
  const auto* f = r.first_failure();
  return f ? f->name : std::string();
}

// Edits of a recipe that keep it a valid member of the generator's family.
inline std::vector<CrownedRecipe> recipe_edits(const CrownedRecipe& r) {
  std::vector<CrownedRecipe> out;
  for (std::size_t v = 0; v < r.disks.size(); ++v)
    for (std::size_t k = 0; k < r.disks[v].size(); ++k) {
      CrownedRecipe e = r;
      e.disks[v].erase(e.disks[v].begin() + static_cast<long>(k));
      out.push_back(std::move(e));
    }
  if (r.homotopies) {
    CrownedRecipe e = r;
    e.homotopies = false;
    out.push_back(std::move(e));
  }
  if (r.basis_change) {
    CrownedRecipe e = r;
    e.basis_change = false;
    out.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < r.lambda.size(); ++i) {
    const IntMatrix& l = r.lambda[i];
    for (std::size_t c = 0; c < l.cols(); ++c) {
      CrownedRecipe e = r;
      e.lambda[i] = exactlin::hstack(l.cols_range(0, c), l.cols_range(c + 1, l.cols() - c - 1));
      out.push_back(std::move(e));
    }
    for (std::size_t row = 0; row < l.rows(); ++row) {
      CrownedRecipe e = r;
      e.lambda[i] = exactlin::vstack(l.rows_range(0, row), l.rows_range(row + 1, l.rows() - row - 1));
      if (exactlin::rank(e.lambda[i]) == e.lambda[i].cols()) out.push_back(std::move(e));
    }
    for (std::size_t a = 0; a < l.rows(); ++a)
      for (std::size_t b = 0; b < l.cols(); ++b)
        for (const Integer& x : {Integer(0), Integer(l(a, b) / 2)}) {
          if (x == l(a, b)) continue;
          CrownedRecipe e = r;
          e.lambda[i](a, b) = x;
          if (exactlin::rank(e.lambda[i]) == e.lambda[i].cols()) out.push_back(std::move(e));
        }
  }
  return out;
}

inline std::vector<IntMatrix> mono_edits(const IntMatrix& m) {
  std::vector<IntMatrix> out;
  auto keep = [&](IntMatrix e) {
    if (e.cols() >= 1 && exactlin::rank(e) == e.cols()) out.push_back(std::move(e));
  };
  for (std::size_t c = 0; c < m.cols(); ++c) keep(exactlin::hstack(m.cols_range(0, c), m.cols_range(c + 1, m.cols() - c - 1)));
  for (std::size_t r = 0; r < m.rows(); ++r) keep(exactlin::vstack(m.rows_range(0, r), m.rows_range(r + 1, m.rows() - r - 1)));
  for (std::size_t a = 0; a < m.rows(); ++a)
    for (std::size_t b = 0; b < m.cols(); ++b)
      for (const Integer& x : {Integer(0), Integer(m(a, b) / 2)}) {
        if (x == m(a, b)) continue;
        IntMatrix e = m;
        e(a, b) = x;
        keep(std::move(e));
      }
  return out;
}

inline ChainMap one_slot_map(int N, const IntMatrix& m) {
  const ComplexPtr s = percomplex::share(PeriodicComplex::concentrated(N, 0, m.cols()));
  const ComplexPtr t = percomplex::share(PeriodicComplex::concentrated(N, 0, m.rows()));
  std::vector<SparseMatrix> blocks;
  for (int n = 0; n < N; ++n) blocks.push_back(n == 0 ? SparseMatrix::from_dense(m) : SparseMatrix(t->rank(n), s->rank(n)));
  return ChainMap(s, t, std::move(blocks));
}

// Smaller payloads for the same check, most aggressive first.
inline std::vector<json> payload_edits(const Instance& in) {
  std::vector<json> out;
  const std::string& c = in.check;
  const json& p = in.payload;
  if (c == "theoremA" || c == "theoremB" || c == "propA" || c == "cones" || c == "foundational") {
    const auto [x, y] = read_pair(p);
    for (auto& e : recipe_edits(x)) out.push_back(pair_payload(e, y));
    for (auto& e : recipe_edits(y)) out.push_back(pair_payload(x, e));
  } else if (c == "disks") {
    for (const char* k : {"ls", "mt"})
      if (p[k].get<long long>() > 1) {
        json e = p;
        e[k] = p[k].get<long long>() - 1;
        out.push_back(std::move(e));
      }
  } else if (c == "main" || c == "kunneth" || c == "calibration" || c == "diagonal") {
    const json& g = p["generator"];
    const int N = p["m"]["period"].get<int>();
    const int mr = g["max_rank"].get<int>(), me = g["max_entry"].get<int>();
    const auto sm = io::read_seed(g["m_seed"], "generator.m_seed"), sn = io::read_seed(g["n_seed"], "generator.n_seed");
    for (auto [r, e] : {std::pair{mr - 1, me}, std::pair{mr, me - 1}}) {
      if (r < 0 || e < 0) continue;
      out.push_back(json{{"m", to_json(generate_twisted(sm, N, r, e))},
                         {"n", to_json(generate_twisted(sn, N, r, e))},
                         {"generator", {{"m_seed", g["m_seed"]}, {"n_seed", g["n_seed"]}, {"max_rank", r}, {"max_entry", e}}}});
    }
  } else if (c == "ppinjective") {
    const ChainMap f = chain_map_from_json(p["f"]), g = chain_map_from_json(p["g"]);
    const int N = f.period();
    const IntMatrix mf = f.block(0).to_dense(), mg = g.block(0).to_dense();
    for (auto& e : mono_edits(mf)) out.push_back(json{{"f", to_json(one_slot_map(N, e))}, {"g", p["g"]}});
    for (auto& e : mono_edits(mg)) out.push_back(json{{"f", p["f"]}, {"g", to_json(one_slot_map(N, e))}});
  }
  return out;
}

}  // namespace detail

struct Shrunk {
  Instance instance;
  Report report;
  int steps = 0;
};

/// Greedy shrinking: keep any edit that fails at the same stage, until no edit applies or the budget runs out.
inline Shrunk shrink(Instance in, Report failing, int budget) {
  Shrunk s{std::move(in), std::move(failing), 0};
  const std::string stage = detail::failing_stage(s.report);
  bool progress = true;
  while (progress && budget > 0) {
    progress = false;
    for (json& cand : detail::payload_edits(s.instance)) {
      if (budget-- <= 0) break;
      Instance next{s.instance.check, std::move(cand)};
      Report r = run_check(next);
      if (!r.pass() && detail::failing_stage(r) == stage) {
        s.instance = std::move(next);
        s.report = std::move(r);
        ++s.steps;
        progress = true;
        break;
      }
    }
  }
  return s;
}

inline json failure_artifact(const Instance& in, const Report& r, std::uint64_t seed, int trial, int steps) {
  const auto* f = r.first_failure();
  return json{{"format_version", format_version},
              {"kind", "failure"},
              {"engine_version", engine_version},
              {"check", in.check},
              {"seed", std::to_string(seed)},
              {"trial", trial},
              {"stage", f ? f->name : ""},
              {"detail", f ? f->detail : ""},
              {"shrink_steps", steps},
              {"instance", in.payload}};
}

struct CheckTally {
  int pass = 0, fail = 0;
  std::vector<json> failures;
  double millis = 0;
};

struct CampaignReport {
  CampaignConfig config;
  std::map<std::string, CheckTally> checks;

  bool all_pass() const {
    for (const auto& [k, t] : checks)
      if (t.fail) return false;
    return true;
  }

  /// Mathematical content only; identical configs give identical documents.
  json content() const {
    json cj = json::object();
    for (const auto& c : config.checks) {
      const auto& t = checks.at(c);
      cj[c] = json{{"pass", t.pass}, {"fail", t.fail}, {"failures", t.failures}};
    }
    return json{{"format_version", format_version},
                {"kind", "campaign_report"},
                {"engine_version", engine_version},
                {"seed", std::to_string(config.seed)},
                {"config",
                 {{"period", config.period}, {"max_rank", config.max_rank}, {"max_entry", config.max_entry},
                  {"trials", config.trials}, {"split", config.split}, {"checks", config.checks}}},
                {"checks", cj}};
  }

  json to_json() const {
    json j = content();
    json timing = json::object();
    for (const auto& c : config.checks) timing[c] = checks.at(c).millis;
    j["timing_ms"] = timing;
    return j;
  }
};

/// Runs every selected check on `trials` instances; failures are shrunk and kept as artifacts.
/// Trials may run on several threads; results are assembled by trial index.
inline CampaignReport run(const CampaignConfig& cfg) {
  cfg.validate();
  CampaignReport rep{cfg, {}};
  struct Outcome {
    bool pass = false;
    json artifact;
  };
  for (const auto& check : cfg.checks) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Outcome> out(static_cast<std::size_t>(cfg.trials));
    auto one = [&](int t) {
      Instance in = make_instance(cfg, check, t);
      Report r = run_check(in);
      Outcome o{r.pass(), {}};
      if (!o.pass) {
        const Shrunk s = shrink(std::move(in), std::move(r), cfg.shrink_budget);
        o.artifact = failure_artifact(s.instance, s.report, cfg.seed, t, s.steps);
      }
      out[static_cast<std::size_t>(t)] = std::move(o);
    };
    const int jobs = std::max(1, cfg.jobs);
    for (int base = 0; base < cfg.trials; base += jobs) {
      std::vector<std::future<void>> fs;
      for (int t = base; t < std::min(cfg.trials, base + jobs); ++t) fs.push_back(std::async(std::launch::async, one, t));
      for (auto& f : fs) f.get();
    }
    CheckTally& tally = rep.checks[check];
    for (auto& o : out) {
      if (o.pass) {
        ++tally.pass;
      } else {
        ++tally.fail;
        tally.failures.push_back(std::move(o.artifact));
      }
    }
    tally.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  return rep;
}

/// Result of re-running a failure artifact.
struct Replay {
  bool reproduced = false;  // fails again at the recorded stage
  Report report;
  std::string recorded_stage;
};

inline Replay replay(const json& artifact, Warnings* w = nullptr) {
  io::check_header(artifact, "", "failure", w);
  const json& check = io::field(artifact, "", "check");
  if (!check.is_string()) io::schema(".check", "expected a string");
  const json& stage = io::field(artifact, "", "stage");
  if (!stage.is_string()) io::schema(".stage", "expected a string");
  Replay out;
  out.recorded_stage = stage.get<std::string>();
  out.report = run_check(Instance{check.get<std::string>(), io::field(artifact, "", "instance")});
  out.reproduced = !out.report.pass() && detail::failing_stage(out.report) == out.recorded_stage;
  return out;
}

/// The Moore(p) fixture with its oracle: R(M (x) M) and R(M) (x) R(M) both have homology Z/3 in the two slots.
inline Instance moore_fixture_instance(bool corrupt = false) {
  const int N = 2;
  const PeriodicComplex M = realization::moore_complex(N, corrupt ? 9 : 3);
  const GradedModule expect(N, {exactlin::FgAbelianGroup(0, {3}), exactlin::FgAbelianGroup(0, {3})});
  return Instance{"fixture", json{{"complex", to_json(M)}, {"expected", to_json(expect)}}};
}

}  // namespace franke::verify
