#include "franke/realization.hpp"
#include "franke/verify/generators.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace franke;
using namespace franke::realization;
using exactlin::FgAbelianGroup;
using exactlin::IntMatrix;
using percomplex::GradedModule;
using percomplex::PeriodicComplex;
using verify::build_crowned;
using verify::generate_twisted;
using verify::random_recipe;
using verify::SplitMix64;

namespace {

// Independent prediction of the pushout-product obstruction from the recipes alone.
bool tor_predicted(const verify::CrownedRecipe& a, const verify::CrownedRecipe& b) {
  for (const auto& la : a.lambda)
    for (const auto& lb : b.lambda)
      if (!exactlin::tor(exactlin::cokernel(la), exactlin::cokernel(lb)).is_zero()) return true;
  return false;
}

CrownedDiagram scalar_sphere(int N, long long q) {
  std::vector<IntMatrix> l(N, IntMatrix(0, 0));
  l[0] = IntMatrix{{q}};
  return sphere_crowned(N, l);
}

ChainMap one_slot(int N, const IntMatrix& m) {
  const auto s = percomplex::share(PeriodicComplex::concentrated(N, 0, m.cols()));
  const auto t = percomplex::share(PeriodicComplex::concentrated(N, 0, m.rows()));
  std::vector<exactlin::SparseMatrix> b;
  for (int n = 0; n < N; ++n) b.emplace_back(t->rank(n), s->rank(n));
  b[0] = exactlin::SparseMatrix::from_dense(m);
  return ChainMap(s, t, std::move(b));
}

}  // namespace

TEST(Q, MooreFixture) {
  const QOutput q = Q(moore_fixture(2, 3));
  const auto& C = *q.complex;
  EXPECT_EQ(C.ranks(), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(abs(C.d(1).get(0, 0)), 3);
  EXPECT_TRUE(C.d(0).is_zero());
  EXPECT_TRUE(sequence_exact(q));
  EXPECT_EQ(percomplex::homology(C), GradedModule::concentrated(2, 0, FgAbelianGroup(0, {3})));
}

TEST(Q, ShortExactSequenceOnRandomDiagrams) {
  SplitMix64 rng(31);
  for (int t = 0; t < 20; ++t) {
    const int N = 2 + 2 * (t % 2);
    const auto X = build_crowned(random_recipe(rng, N, 2, 3));
    const QOutput q = Q(X);
    ASSERT_TRUE(sequence_exact(q));
    for (int n = 0; n < N; ++n) ASSERT_EQ(q.C.group(n).free_rank(), q.Z.group(n).free_rank() + q.B.group(n - 1).free_rank());
  }
}

TEST(Q, CheckLRejectsZeroLambda) {
  const auto m = check_L(scalar_sphere(4, 0));
  EXPECT_FALSE(m.member);
  EXPECT_FALSE(m.failure.empty());
  EXPECT_TRUE(check_L(scalar_sphere(4, 5)).member);
}

TEST(Q, CheckLRejectsStraySlots) {
  // the disk at z_{s-1} sits in slot s-1, but a shifted vertex does not
  const auto D = disk_crowned(4, 1);
  EXPECT_TRUE(check_L(D).member);
  const auto& d = D.diagram();
  std::vector<ComplexPtr> v;
  for (std::size_t a = 0; a < d.shape().size(); ++a) v.push_back(percomplex::share(percomplex::shift(d.vertex(a), 1)));
  std::map<diagramkit::Edge, ChainMap> e;
  for (const auto& [k, f] : d.edges()) e.emplace(k, ChainMap(v[k.first], v[k.second], [&] {
                                                   std::vector<exactlin::SparseMatrix> b;
                                                   for (int n = 0; n < 4; ++n) b.push_back(f.block(n - 1));
                                                   return b;
                                                 }()));
  const CrownedDiagram shifted(diagramkit::ComplexDiagram(d.shape_ptr(), v, std::move(e)));
  EXPECT_FALSE(check_L(shifted).member);
}

TEST(Inverse, RoundTripAndHomology) {
  for (int N = 2; N <= 6; ++N)
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      const auto M = generate_twisted(seed * 7 + N, N, 3, 4);
      const RoundTrip rt = round_trip(M);
      ASSERT_TRUE(rt.ok) << rt.detail;
      ASSERT_EQ(percomplex::homology(*Q(Q_inverse(M).diagram).complex), oracle::homology_oracle(M));
    }
}

TEST(Calibration, ShiftIsZero) {
  for (int N = 2; N <= 6; ++N) EXPECT_EQ(calibration_shift(N), 0) << N;
}

TEST(Calibration, RealizationRecoversHomology) {
  for (int N = 2; N <= 5; ++N)
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const auto M = generate_twisted(seed + 300, N, 2, 4);
      const Report r = calibration_verify(M);
      ASSERT_TRUE(r.pass()) << r.summary();
      ASSERT_EQ(percomplex::homology(realize_R(M)), oracle::homology_oracle(M));
    }
}

TEST(MainTheorem, EvenPeriods) {
  for (int N : {2, 4, 6})
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const Report r = main_theorem_verify(generate_twisted(seed, N, 2, 3), generate_twisted(seed + 40, N, 2, 3));
      ASSERT_TRUE(r.pass()) << N << " " << r.summary();
    }
}

TEST(Disks, TransportedDifferentialAtPeriodFour) {
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t) {
      const Report r = disks_differential_verify(4, s, t);
      EXPECT_TRUE(r.pass()) << s << "," << t << ": " << r.summary();
    }
  EXPECT_TRUE(disks_differential_verify(4, 1, 2, 2, 3).pass());
}

TEST(Disks, PeriodTwoLeavesL) {
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t) {
      const Report r = disks_differential_verify(2, s, t);
      ASSERT_NE(r.first_failure(), nullptr);
      EXPECT_EQ(r.first_failure()->name, "Q");
      EXPECT_NE(r.first_failure()->detail.find("NotInL"), std::string::npos) << r.first_failure()->detail;
    }
}

TEST(Disks, PeriodThreeOddTensor) {
  const Report r = disks_differential_verify(3, 0, 0);
  ASSERT_NE(r.first_failure(), nullptr);
  EXPECT_EQ(r.first_failure()->name, "koszul");
  EXPECT_TRUE(disks_differential_verify(3, 1, 2).pass());
}

TEST(TheoremA, SplitCorpusPasses) {
  SplitMix64 rng(2024);
  for (int t = 0; t < 12; ++t) {
    const int N = t < 8 ? 4 : 6;
    const auto X = build_crowned(random_recipe(rng, N, 2, 3, true));
    const auto Y = build_crowned(random_recipe(rng, N, 2, 3, true));
    const auto p = tensor_pipeline(X, Y);
    const Report a = theorem_A_verify(p), pa = propA_verify(p), c = cones_verify(p, false);
    ASSERT_TRUE(a.pass()) << a.summary();
    ASSERT_TRUE(pa.pass()) << pa.summary();
    ASSERT_TRUE(c.pass()) << c.summary();
    ASSERT_TRUE(check_L(p.iE).member);
  }
}

TEST(TheoremA, FailsExactlyOnTorAtPeriodFour) {
  SplitMix64 rng(77);
  int predicted = 0;
  for (int t = 0; t < 16; ++t) {
    const auto rx = random_recipe(rng, 4, 2, 3), ry = random_recipe(rng, 4, 2, 3);
    const Report a = theorem_A_verify(build_crowned(rx), build_crowned(ry));
    predicted += tor_predicted(rx, ry);
    ASSERT_EQ(a.pass(), !tor_predicted(rx, ry)) << a.summary();
  }
  EXPECT_GT(predicted, 0);  // the seed must exercise both sides
  EXPECT_LT(predicted, 16);
}

TEST(TheoremA, MooreSquaredCounterexample) {
  const auto M = scalar_sphere(4, 3);
  const auto p = tensor_pipeline(M, M);
  const Report a = theorem_A_verify(p);
  ASSERT_NE(a.first_failure(), nullptr);
  EXPECT_EQ(a.first_failure()->name, "membership");
  const Report pa = propA_verify(p);
  ASSERT_NE(pa.first_failure(), nullptr);
  EXPECT_EQ(pa.first_failure()->name, "n=0 injective");
  // the kernel is Tor(Z/3, Z/3)
  EXPECT_NE(pa.first_failure()->detail.find("Z/3"), std::string::npos) << pa.first_failure()->detail;
  EXPECT_TRUE(theorem_B_verify(p).pass());
}

TEST(TheoremB, RandomDiagramsAtPeriodFour) {
  SplitMix64 rng(5150);
  for (int t = 0; t < 8; ++t) {
    const auto p = tensor_pipeline(build_crowned(random_recipe(rng, 4, 2, 3)), build_crowned(random_recipe(rng, 4, 2, 3)));
    const Report r = theorem_B_verify(p);
    ASSERT_TRUE(r.pass()) << r.summary();
  }
}

TEST(TheoremB, FinalityStageFailsAtPeriodTwo) {
  SplitMix64 rng(6);
  const auto p = tensor_pipeline(build_crowned(random_recipe(rng, 2, 1, 2)), build_crowned(random_recipe(rng, 2, 1, 2)));
  const Report r = theorem_B_verify(p);
  ASSERT_NE(r.first_failure(), nullptr);
  EXPECT_EQ(r.stages.back().name, "finality");
  EXPECT_FALSE(r.stages.back().pass);
}

TEST(Conical, CertificatesMissingOnBetaCoslices) {
  const Report r = conical_certificates(3);
  bool beta_failed = false;
  for (const auto& s : r.stages)
    if (s.name.rfind("b", 0) == 0 && !s.pass) beta_failed = true;
  EXPECT_TRUE(beta_failed) << r.summary();
}

TEST(Foundational, DiagonalSignIsMinusOne) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto X = generate_twisted(seed, 4, 2, 3);
    const Report r = diagonal_verify(X);
    ASSERT_TRUE(r.pass()) << r.summary();
  }
  // with free homology the opposite sign is wrong
  const auto Z = PeriodicComplex::concentrated(4, 0, 1);
  EXPECT_FALSE(diagonal_verify(Z, 1).pass());
}

TEST(Foundational, PushoutProductOfTimesThree) {
  const ChainMap f = one_slot(2, IntMatrix{{3}});
  const Report r = ppinjective_verify(f, f);
  ASSERT_EQ(r.stages.size(), 2u);
  EXPECT_TRUE(r.stages[0].pass) << r.stages[0].detail;   // kernel = Tor(Z/3, Z/3)
  EXPECT_FALSE(r.stages[1].pass);                        // not injective
  const ChainMap split = one_slot(2, IntMatrix{{1}, {0}});
  EXPECT_TRUE(ppinjective_verify(split, f).pass());
}

TEST(Foundational, KunnethAndColimits) {
  SplitMix64 rng(88);
  for (int t = 0; t < 6; ++t) {
    const auto X = build_crowned(random_recipe(rng, 4, 2, 3));
    ASSERT_TRUE(h0_colimit_verify(X.diagram()).pass());
    ASSERT_TRUE(kan_preservation_verify(posetkit::crown_shapes(4).i, X.diagram()).pass());
    ASSERT_TRUE(kunneth_verify(generate_twisted(t, 4, 2, 3), generate_twisted(t + 9, 4, 2, 3)).pass());
  }
  const Report odd = kunneth_verify(PeriodicComplex::disk(3, 0), realization::moore_complex(3, 2));
  ASSERT_NE(odd.first_failure(), nullptr);
  EXPECT_EQ(odd.first_failure()->name, "tensor");
}

TEST(Foundational, HocolimInvarianceUnderDisks) {
  SplitMix64 rng(19);
  for (int t = 0; t < 5; ++t) {
    const auto X = build_crowned(random_recipe(rng, 4, 2, 3));
    std::vector<std::vector<int>> tops(X.diagram().shape().size());
    for (auto& v : tops) v.push_back(static_cast<int>(rng.uniform(0, 3)));
    ASSERT_TRUE(hocolim_invariance_verify(X.diagram(), tops).pass());
  }
}

TEST(ConeMonoidal, RandomMonos) {
  SplitMix64 rng(404);
  for (int t = 0; t < 8; ++t) {
    const ChainMap f = verify::random_mono(rng, 4, 2, 3), g = verify::random_mono(rng, 4, 2, 3);
    const Report r = cone_monoidal_verify(f, g);
    ASSERT_TRUE(r.pass()) << r.summary();
  }
}
