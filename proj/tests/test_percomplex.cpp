#include "franke/percomplex.hpp"
#include "franke/realization/q.hpp"
#include "franke/verify/generators.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace franke;
using namespace franke::percomplex;
using exactlin::FgAbelianGroup;
using exactlin::IntMatrix;
using exactlin::Integer;
using exactlin::SparseMatrix;
using verify::generate_twisted;
using verify::SplitMix64;
using oracle::homology_oracle;

namespace {

PeriodicComplex moore(int N, long long p) { return realization::moore_complex(N, p); }

FgAbelianGroup cyclic(long long m) { return FgAbelianGroup(0, {m}); }

}  // namespace

TEST(Complex, RejectsNonSquareZero) {
  std::vector<SparseMatrix> d(2, SparseMatrix(1, 1));
  d[0].add(0, 0, 1);
  d[1].add(0, 0, 1);
  EXPECT_THROW(PeriodicComplex(2, {1, 1}, d), Error);
}

TEST(Complex, RejectsWrongShapes) {
  EXPECT_THROW(PeriodicComplex(2, {1, 2}, {SparseMatrix(2, 1), SparseMatrix(2, 2)}), Error);
  EXPECT_THROW(PeriodicComplex(3, {1, 1}, {SparseMatrix(1, 1), SparseMatrix(1, 1)}), Error);
}

TEST(Complex, ZeroPeriodOneIsAllowed) {
  const auto z = PeriodicComplex::zero(1);
  EXPECT_EQ(z.total_rank(), 0u);
  EXPECT_TRUE(homology(z).is_zero());
}

TEST(Homology, MooreComplex) {
  for (int N : {2, 3, 4, 6}) {
    const auto h = homology(moore(N, 3));
    EXPECT_EQ(h, GradedModule::concentrated(N, 0, cyclic(3))) << N;
  }
}

TEST(Homology, DiskIsAcyclic) {
  for (int N : {2, 3, 5})
    for (int s = 0; s < N; ++s) EXPECT_TRUE(homology(PeriodicComplex::disk(N, s)).is_zero());
}

TEST(Homology, MatchesDeterminantalOracle) {
  for (int N : {2, 3, 4, 5})
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const auto c = generate_twisted(seed * 31 + N, N, 3, 4);
      ASSERT_EQ(homology(c), homology_oracle(c)) << "N=" << N << " seed=" << seed;
    }
}

TEST(Homology, GeneratorsAreCyclesAndCoordinatesRoundTrip) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Homology h(generate_twisted(seed, 4, 3, 3));
    for (int n = 0; n < 4; ++n) {
      const auto& gens = h.generators(n);
      ASSERT_EQ(gens.size(), h.presentation(n).generators);
      for (std::size_t k = 0; k < gens.size(); ++k) {
        ASSERT_TRUE(h.is_cycle(n, gens[k]));
        const auto coords = h.coordinates(n, gens[k]);
        for (std::size_t j = 0; j < coords.size(); ++j) ASSERT_EQ(coords[j], j == k ? 1 : 0);
      }
    }
  }
}

TEST(Homology, BoundariesAreRecognized) {
  const auto c = moore(2, 3);
  const Homology h(c);
  SparseVec three;
  three.emplace_back(0, 3);
  EXPECT_TRUE(h.is_boundary(0, three));
  SparseVec one;
  one.emplace_back(0, 1);
  EXPECT_FALSE(h.is_boundary(0, one));
}

TEST(Shift, RotatesSlotsAndHomology) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto c = generate_twisted(seed, 4, 2, 3);
    for (int k = -3; k <= 5; ++k) {
      const auto s = shift(c, k);
      for (int n = 0; n < 4; ++n) ASSERT_EQ(s.rank(n), c.rank(n - k));
      ASSERT_EQ(homology(s), homology(c).shifted(k));
    }
    ASSERT_EQ(shift(shift(c, 1), -1), c);
  }
}

TEST(Cone, OfIdentityIsAcyclic) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto X = share(generate_twisted(seed, 4, 3, 3));
    const Cone c = cone(ChainMap::identity(X));
    ASSERT_TRUE(homology(*c.complex).is_zero());
    // incl after id is null-homotopic through the recorded homotopy
    ASSERT_TRUE(c.null.boundary().same_blocks(c.incl));
  }
}

TEST(Cone, OfZeroMapSplits) {
  const auto X = share(moore(4, 5));
  const auto Y = share(generate_twisted(9, 4, 2, 3));
  const Cone c = cone(ChainMap::zero(X, Y));
  EXPECT_EQ(homology(*c.complex), direct_sum(homology(*Y), homology(*X).shifted(1)));
}

TEST(Cone, LongExactSequence) {
  // H(X) -> H(Y) -> H(Cf) -> H(X)[1] is exact at H(Y) and at H(Cf)
  SplitMix64 rng(44);
  for (int t = 0; t < 20; ++t) {
    const ChainMap f = verify::random_chain_map(rng, 4, 2, 3);
    const Cone c = cone(f);
    const Homology hx(f.source_ptr()), hy(f.target_ptr()), hc(c.complex), hx1(c.bdry.target_ptr());
    const GradedMap a = induced_map(f, hx, hy), b = induced_map(c.incl, hy, hc), d = induced_map(c.bdry, hc, hx1);
    ASSERT_TRUE(exact(a, b));
    ASSERT_TRUE(exact(b, d));
  }
}

TEST(Tensor, SquareZeroAtEvenPeriod) {
  for (int N : {2, 4, 6})
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      const auto x = generate_twisted(seed, N, 2, 3), y = generate_twisted(seed + 100, N, 2, 3);
      const auto t = tensor(x, y);  // the constructor checks d^2 = 0
      for (int n = 0; n < N; ++n) {
        std::size_t r = 0;
        for (int i = 0; i < N; ++i) r += x.rank(i) * y.rank(n - i);
        ASSERT_EQ(t.rank(n), r);
      }
    }
}

TEST(Tensor, OddPeriodWrapAroundThrows) {
  // the disk's differential wraps from slot 0 to slot 2, where (-1)^|x| is not well defined mod 3
  EXPECT_THROW(tensor(PeriodicComplex::disk(3, 0), moore(3, 2)), Error);
  EXPECT_NO_THROW(tensor(moore(3, 2), moore(3, 2)));
  // zero differentials are harmless
  EXPECT_NO_THROW(tensor(PeriodicComplex::concentrated(3, 1, 2), moore(3, 2)));
}

TEST(Tensor, UnitLaw) {
  for (int N : {2, 4}) {
    const auto unit = PeriodicComplex::concentrated(N, 0, 1);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto x = generate_twisted(seed, N, 3, 3);
      ASSERT_EQ(tensor(unit, x), x);
      ASSERT_EQ(tensor(x, unit), x);
    }
  }
}

TEST(Tensor, MooreTimesMooreAtPeriodTwo) {
  const auto h = homology(tensor(moore(2, 3), moore(2, 3)));
  EXPECT_EQ(h.group(0), cyclic(3));
  EXPECT_EQ(h.group(1), cyclic(3));
}

TEST(Kunneth, ShortExactSequence) {
  for (int N : {2, 4})
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const auto x = generate_twisted(seed, N, 2, 4), y = generate_twisted(seed + 7, N, 2, 4);
      const GradedMap k = kunneth_map(x, y);
      ASSERT_TRUE(k.is_injective());
      ASSERT_EQ(k.cokernel_module(), graded_tor(homology(x), homology(y)));
      ASSERT_EQ(k.source_module(), graded_tensor(homology(x), homology(y)));
    }
}

TEST(GradedModules, TensorAndTorAgainstCyclicOracle) {
  const int N = 4;
  const auto a = GradedModule::concentrated(N, 1, cyclic(4)), b = GradedModule::concentrated(N, 2, cyclic(6));
  EXPECT_EQ(graded_tensor(a, b), GradedModule::concentrated(N, 3, cyclic(2)));
  // Tor sits one slot up: 1 + 2 + 1 = 0 mod 4
  EXPECT_EQ(graded_tor(a, b), GradedModule::concentrated(N, 0, cyclic(2)));
  EXPECT_EQ(a.shifted(4), a);
  EXPECT_TRUE(a.concentrated_in(5));
}

TEST(ChainMaps, ComposeAndInduced) {
  SplitMix64 rng(5);
  for (int t = 0; t < 10; ++t) {
    const ChainMap f = verify::random_chain_map(rng, 4, 2, 2);
    const auto id = ChainMap::identity(f.target_ptr());
    ASSERT_TRUE(compose(id, f).same_blocks(f));
    const auto h = induced_map(ChainMap::identity(f.source_ptr()));
    ASSERT_TRUE(h.is_isomorphism());
  }
}
