// verify: campaigns, fixtures and replay of failure artifacts.
// Exit status: 0 all pass, 1 verification failure, 2 usage or input error.

#include "franke/verify/campaign.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace franke;
using namespace franke::verify;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

void write_json(const fs::path& path, const json& j) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream os(path);
  if (!os) fail(ErrorKind::parse_error, "cannot write " + path.string());
  os << j.dump(2) << "\n";
}

json read_json(const fs::path& path) {
  std::ifstream is(path);
  if (!is) fail(ErrorKind::parse_error, "cannot read " + path.string());
  std::stringstream ss;
  ss << is.rdbuf();
  return verify::parse(ss.str());
}

std::vector<std::string> split_checks(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item == "all" ? std::string() : item);
  if (std::find(out.begin(), out.end(), std::string()) != out.end()) return known_checks();
  return out;
}

int campaign(const CampaignConfig& cfg, const std::string& out) {
  const CampaignReport rep = run(cfg);
  for (const auto& c : cfg.checks) {
    const auto& t = rep.checks.at(c);
    std::cout << c << ": " << t.pass << "/" << cfg.trials << " pass";
    if (t.fail) std::cout << ", first failure trial " << t.failures.front()["trial"] << " at " << t.failures.front()["stage"].get<std::string>();
    std::cout << "\n";
  }
  if (!out.empty()) {
    const fs::path path(out);
    write_json(path, rep.to_json());
    const fs::path dir = path.parent_path() / (path.stem().string() + ".failures");
    for (const auto& c : cfg.checks)
      for (const auto& a : rep.checks.at(c).failures)
        write_json(dir / (c + "-" + std::to_string(a["trial"].get<int>()) + ".json"), a);
    std::cout << "report written to " << path.string() << "\n";
  }
  return rep.all_pass() ? exit_pass : exit_fail;
}

int fixture(const std::string& name, bool corrupt, const std::string& out) {
  if (name != "moore3") {
    std::cerr << "unknown fixture \"" << name << "\" (available: moore3)\n";
    return exit_usage;
  }
  const Instance in = moore_fixture_instance(corrupt);
  const Report r = run_check(in);
  for (const auto& s : r.stages) std::cout << (s.pass ? "pass  " : "FAIL  ") << s.name << (s.detail.empty() ? "" : "  " + s.detail) << "\n";
  if (r.pass()) return exit_pass;
  const fs::path path = out.empty() ? fs::path("moore3-failure.json") : fs::path(out);
  write_json(path, failure_artifact(in, r, 0, 0, 0));
  std::cout << "failure artifact written to " << path.string() << "\n";
  return exit_fail;
}

int replay_file(const std::string& file) {
  const json doc = read_json(file);
  std::vector<json> artifacts;
  if (doc.is_object() && doc.value("kind", "") == "campaign_report") {
    for (const auto& [check, body] : doc.at("checks").items())
      for (const auto& a : body.at("failures")) artifacts.push_back(a);
  } else {
    artifacts.push_back(doc);
  }
  bool any_failure = false, mismatch = false;
  for (const auto& a : artifacts) {
    Warnings w;
    const Replay r = replay(a, &w);
    for (const auto& s : w) std::cerr << "warning: " << s << "\n";
    const std::string label = a.at("check").get<std::string>() + " trial " + a.value("trial", json(0)).dump();
    if (r.reproduced) {
      std::cout << label << ": reproduced at " << r.recorded_stage << "\n";
      any_failure = true;
    } else if (!r.report.pass()) {
      std::cout << label << ": fails at a different stage (" << r.report.summary() << ", recorded " << r.recorded_stage << ")\n";
      any_failure = mismatch = true;
    } else {
      std::cout << label << ": passes now (recorded " << r.recorded_stage << ")\n";
      mismatch = true;
    }
  }
  if (mismatch) std::cerr << "replay did not match every recorded failure\n";
  return any_failure ? exit_fail : exit_pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification driver for twisted complexes and crowned diagrams"};
  app.require_subcommand(1);

  CampaignConfig cfg;
  std::string checks = "theoremA", out;
  auto* camp = app.add_subcommand("campaign", "run seeded randomized checks");
  camp->add_option("--seed", cfg.seed, "64-bit seed")->required();
  camp->add_option("--period", cfg.period, "period N (at least 2)");
  camp->add_option("--trials", cfg.trials, "instances per check");
  camp->add_option("--checks", checks, "comma separated: theoremA,theoremB,propA,cones,disks,main,finality,kunneth,"
                                       "calibration,ppinjective,cone_monoidal,diagonal,foundational or all");
  camp->add_option("--max-rank", cfg.max_rank, "largest sphere rank");
  camp->add_option("--max-entry", cfg.max_entry, "largest absolute matrix entry");
  camp->add_flag("--split", cfg.split, "only lambda with free cokernel");
  camp->add_option("--jobs", cfg.jobs, "worker threads");
  camp->add_option("--shrink-budget", cfg.shrink_budget, "re-runs allowed while shrinking one failure");
  camp->add_option("--out", out, "report path; failures go next to it");

  std::string fixture_name, fixture_out;
  bool corrupt = false;
  auto* fix = app.add_subcommand("fixture", "run a named fixture against its oracle");
  fix->add_option("name", fixture_name, "fixture name (moore3)")->required();
  fix->add_flag("--corrupt", corrupt, "perturb the fixture so that it must fail");
  fix->add_option("--out", fixture_out, "failure artifact path");

  std::string replay_path;
  auto* rep = app.add_subcommand("replay", "re-run a failure artifact or every failure of a report");
  rep->add_option("file", replay_path, "artifact or report")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_pass : exit_usage;
  }

  try {
    if (*camp) {
      cfg.checks = split_checks(checks);
      try {
        cfg.validate();
      } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_usage;
      }
      return campaign(cfg, out);
    }
    if (*fix) return fixture(fixture_name, corrupt, fixture_out);
    if (*rep) return replay_file(replay_path);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == ErrorKind::parse_error ? exit_usage : exit_fail;
  } catch (const json::exception& e) {
    std::cerr << "ParseError: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
