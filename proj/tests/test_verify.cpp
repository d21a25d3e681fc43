#include "franke/verify.hpp"

#include <gtest/gtest.h>

using namespace franke;
using namespace franke::verify;
using exactlin::IntMatrix;
using percomplex::GradedModule;
using percomplex::PeriodicComplex;

namespace {

CampaignConfig small_config(std::uint64_t seed, std::vector<std::string> checks, bool split) {
  CampaignConfig c;
  c.seed = seed;
  c.period = 4;
  c.trials = 6;
  c.checks = std::move(checks);
  c.split = split;
  c.shrink_budget = 60;
  return c;
}

std::string parse_error_text(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::parse_error);
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Rng, SplitMixReferenceValues) {
  // first outputs of the reference splitmix64 generator started at state 0
  SplitMix64 r(0);
  EXPECT_EQ(r.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(r.next(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(r.next(), 0x06C45D188009454FULL);
}

TEST(Rng, UniformStaysInRangeAndForksDiffer) {
  SplitMix64 r(9);
  for (int i = 0; i < 1000; ++i) {
    const auto x = r.uniform(-3, 5);
    ASSERT_GE(x, -3);
    ASSERT_LE(x, 5);
  }
  EXPECT_NE(r.fork(0).next(), r.fork(1).next());
  EXPECT_EQ(r.fork(4).next(), SplitMix64(9).fork(4).next());
}

TEST(Generators, TwistedIsDeterministicAndSquareZero) {
  for (int N = 2; N <= 6; ++N)
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto a = generate_twisted(seed, N, 3, 5);  // the constructor checks d^2 = 0
      ASSERT_EQ(a, generate_twisted(seed, N, 3, 5));
    }
  const auto z = generate_twisted(3, 4, 0, 5);
  EXPECT_EQ(z.total_rank(), 0u);
}

TEST(Generators, RecipesBuildMembersOfL) {
  SplitMix64 rng(12);
  for (int t = 0; t < 20; ++t) {
    const auto r = random_recipe(rng, 4, 2, 3, t % 2 == 0);
    ASSERT_TRUE(realization::check_L(build_crowned(r)).member);
    if (t % 2 == 0) {
      for (const auto& l : r.lambda) ASSERT_TRUE(exactlin::cokernel(l).is_free());
    }
  }
}

TEST(Io, RoundTripOfEveryKind) {
  SplitMix64 rng(5);
  for (int t = 0; t < 10; ++t) {
    const auto M = generate_twisted(t, 4, 3, 4);
    ASSERT_EQ(complex_from_json(parse(to_json(M).dump())), M);
    const GradedModule h = percomplex::homology(M);
    ASSERT_EQ(module_from_json(parse(to_json(h).dump())), h);
    const auto recipe = random_recipe(rng, 4, 2, 3);
    const auto back = recipe_from_json(parse(to_json(recipe).dump()));
    ASSERT_EQ(back.lambda, recipe.lambda);
    ASSERT_EQ(back.disks, recipe.disks);
    ASSERT_EQ(back.seed, recipe.seed);
    const auto X = build_crowned(recipe);
    const auto Xb = crowned_from_json(parse(to_json(X).dump()));
    for (std::size_t a = 0; a < X.diagram().shape().size(); ++a) ASSERT_EQ(Xb.diagram().vertex(a), X.diagram().vertex(a));
    const auto f = random_chain_map(rng, 4, 2, 3);
    const auto fb = chain_map_from_json(parse(to_json(f).dump()));
    ASSERT_TRUE(fb.same_blocks(f));
  }
}

TEST(Io, BigIntegersSurviveAsStrings) {
  const exactlin::Integer big("123456789012345678901234567890");
  const json j = io::integer(big);
  EXPECT_TRUE(j.is_string());
  EXPECT_EQ(io::read_integer(j, ".x"), big);
  EXPECT_TRUE(io::integer(exactlin::Integer(-7)).is_number_integer());
}

TEST(Io, MalformedPeriodNamesTheField) {
  json j = to_json(generate_twisted(1, 4, 2, 3));
  j["period"] = -2;
  try {
    complex_from_json(j);
    FAIL() << "negative period accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::parse_error);
    EXPECT_NE(std::string(e.what()).find(".period"), std::string::npos) << e.what();
  }
}

TEST(Io, WrongKindIsRejected) {
  json j = to_json(generate_twisted(1, 4, 2, 3));
  EXPECT_THROW(module_from_json(j), Error);
}

TEST(Io, VersionMismatchWarns) {
  json j = to_json(generate_twisted(1, 4, 2, 3));
  j["format_version"] = 7;
  Warnings w;
  EXPECT_NO_THROW(complex_from_json(j, &w));
  ASSERT_EQ(w.size(), 1u);
  EXPECT_NE(w[0].find("7"), std::string::npos);
  j.erase("format_version");
  w.clear();
  complex_from_json(j, &w);
  EXPECT_EQ(w.size(), 1u);
}

TEST(Io, SyntaxErrorReportsPosition) {
  const std::string msg = parse_error_text("{\n  \"kind\": \"periodic_complex\",\n  \"period\": ,\n}");
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
  EXPECT_NE(msg.find("column"), std::string::npos) << msg;
}

TEST(Campaign, DeterministicAcrossJobCounts) {
  auto c1 = small_config(5, {"theoremA", "kunneth"}, false);
  auto c4 = c1;
  c4.jobs = 4;
  const auto r1 = run(c1), r4 = run(c4);
  EXPECT_EQ(r1.content(), r4.content());
  for (const auto& [k, t] : r1.checks) EXPECT_EQ(t.pass + t.fail, c1.trials);
}

TEST(Campaign, SplitCorpusPasses) {
  const auto r = run(small_config(3, {"theoremA", "theoremB", "propA", "cones", "main", "calibration"}, true));
  for (const auto& [k, t] : r.checks) EXPECT_EQ(t.fail, 0) << k << ": " << (t.failures.empty() ? "" : t.failures[0].dump());
  EXPECT_TRUE(r.all_pass());
}

TEST(Campaign, ValidationRejectsBadConfigs) {
  auto c = small_config(1, {"theoremA"}, false);
  c.period = 1;
  EXPECT_THROW(c.validate(), Error);
  c = small_config(1, {"nonsense"}, false);
  EXPECT_THROW(c.validate(), Error);
  c = small_config(1, {}, false);
  EXPECT_THROW(c.validate(), Error);
}

TEST(Campaign, FailuresReplayAndShrink) {
  auto c = small_config(5, {"theoremA"}, false);
  c.trials = 10;
  const auto r = run(c);
  const auto& t = r.checks.at("theoremA");
  ASSERT_GT(t.fail, 0);
  for (const auto& a : t.failures) {
    Warnings w;
    const Replay rp = replay(parse(a.dump()), &w);
    EXPECT_TRUE(w.empty());
    EXPECT_TRUE(rp.reproduced) << a.dump();
    EXPECT_EQ(rp.recorded_stage, a["stage"].get<std::string>());
  }
  bool shrunk = false;
  for (const auto& a : t.failures) shrunk |= a["shrink_steps"].get<int>() > 0;
  EXPECT_TRUE(shrunk);
}

TEST(Campaign, ShrinkKeepsTheFailingStage) {
  // a Moore square with a wide lambda and extra disks shrinks but still fails at membership
  CrownedRecipe x;
  x.period = 4;
  x.lambda = {IntMatrix{{3, 0}, {0, 1}}, IntMatrix(0, 0), IntMatrix(0, 0), IntMatrix(0, 0)};
  x.disks = {{1}, {}, {2}, {}, {}, {}, {}, {}};
  x.seed = 11;
  const Instance in{"theoremA", detail::pair_payload(x, x)};
  const Report r = run_check(in);
  ASSERT_FALSE(r.pass());
  const Shrunk s = shrink(in, r, 100);
  EXPECT_GT(s.steps, 0);
  EXPECT_EQ(detail::failing_stage(s.report), detail::failing_stage(r));
  const auto small = recipe_from_json(s.instance.payload["x"]);
  std::size_t cells = 0;
  for (const auto& l : small.lambda) cells += l.rows() * l.cols();
  EXPECT_LE(cells, 4u);
}

TEST(Fixture, MooreThreePassesAndCorruptionFails) {
  EXPECT_TRUE(run_check(moore_fixture_instance(false)).pass());
  const Instance bad = moore_fixture_instance(true);
  const Report r = run_check(bad);
  ASSERT_FALSE(r.pass());
  const json art = failure_artifact(bad, r, 0, 0, 0);
  EXPECT_EQ(art["kind"], "failure");
  EXPECT_TRUE(replay(art).reproduced);
}
