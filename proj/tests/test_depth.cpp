#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace cdepth;
using namespace testing_support;

namespace {

// S_1 and two rotations of it by the rational-angle rotation (3,-4; 4,3)/5,
// scaled to integers.
Configuration rotated_triangles() {
  std::vector<std::vector<Coords>> classes{{pt({1, 0}), pt({-1, 1}), pt({-1, -1})}};
  for (int k = 0; k < 2; ++k) {
    std::vector<Coords> next;
    for (const auto& p : classes.back()) next.push_back({3 * p[0] - 4 * p[1], 4 * p[0] + 3 * p[1]});
    classes.push_back(next);
  }
  return Configuration::create(2, classes, CoreMode::full);
}

}  // namespace

TEST(Depth, MatchesBarycentricEnumeration) {
  std::vector<Configuration> configs{w2(), rotated_triangles(), diamond_d2()};
  for (std::uint64_t seed = 0; seed < 6; ++seed) configs.push_back(random_full(2 + seed % 2, seed));
  configs.push_back(random_diamond(3, 1));
  for (const auto& c : configs) {
    const DepthReport r = enumerate_depth(c);
    EXPECT_EQ(r.simplices, oracle_simplices(c));
    EXPECT_EQ(r.depth, r.simplices.size());
  }
}

TEST(Depth, CoverageRowsSumToDepth) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto c = random_full(2 + seed % 3, seed);
    const DepthReport r = enumerate_depth(c);
    for (const auto& row : r.cov) {
      std::uint64_t sum = 0;
      for (auto x : row) sum += x;
      EXPECT_EQ(sum, r.depth);
    }
  }
}

TEST(Depth, IndependentOfThreadCount) {
  const auto c = random_full(3, 4);
  const auto a = Engine(c, 1).report();
  const auto b = Engine(c, 3).report();
  EXPECT_EQ(a.simplices, b.simplices);
  EXPECT_EQ(a.cov, b.cov);
}

TEST(Depth, InvariantUnderPositiveRescaling) {
  Rng rng(3);
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto c = random_full(2 + seed % 2, seed);
    auto classes = c.classes();
    for (auto& cls : classes)
      for (auto& p : cls) {
        const Rat lambda(rng.uniform(1, 100), rng.uniform(1, 100));
        for (auto& x : p) x *= lambda;
      }
    const auto scaled = Configuration::create(c.dim(), classes, c.mode());
    EXPECT_EQ(enumerate_depth(c).simplices, enumerate_depth(scaled).simplices);
  }
}

TEST(Depth, BigIntegerPathAgreesWithFastPath) {
  // An invertible linear map with positive determinant preserves every cone
  // and simplex relation; entries near 2^100 force the arbitrary-precision path.
  const auto c = random_full(3, 2);
  const Rat h = Rat(BigInt(1) << 100) + 1;
  auto classes = c.classes();
  for (auto& cls : classes)
    for (auto& p : cls) p = {h * p[0] + p[1], p[0] + p[1], p[2]};
  const auto big = Configuration::create(3, classes, CoreMode::full);
  Engine engine(big);
  EXPECT_FALSE(engine.fast_path());
  EXPECT_TRUE(Engine(c).fast_path());
  EXPECT_EQ(engine.report().simplices, enumerate_depth(c).simplices);
  EXPECT_EQ(engine.report().simplices, oracle_simplices(big));
}

TEST(Depth, W2HasDepthFive) {
  const auto r = enumerate_depth(w2());
  EXPECT_EQ(r.depth, 5u);
}

TEST(Depth, FullCoreDepthsMeetKnownMinima) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) EXPECT_GE(enumerate_depth(random_full(2, seed)).depth, 5u);
  for (std::uint64_t seed = 0; seed < 15; ++seed) EXPECT_GE(enumerate_depth(random_full(3, seed)).depth, 10u);
}

TEST(TransversalsSpanning, LengthIsCoverage) {
  const auto c = w2();
  const Engine engine(c);
  const auto r = engine.report();
  std::uint64_t least = ~0ULL;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t s = 0; s < 3; ++s) {
      const auto list = transversals_spanning(engine, i, s);
      EXPECT_EQ(list.size(), r.cov[i][s]);
      EXPECT_GE(list.size(), 1u);
      least = std::min<std::uint64_t>(least, list.size());
    }
  EXPECT_EQ(least, 1u);  // a depth-5 configuration has a singly covered antipode
}

TEST(TransversalsSpanning, RotatedTrianglesAgainstBruteForce) {
  const auto c = rotated_triangles();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t s = 0; s < 3; ++s) {
      std::vector<Transversal> expected;
      const std::size_t a = i == 0 ? 1 : 0, b = i == 2 ? 1 : 2;
      for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
          std::vector<Coords> gens{c.point(a, static_cast<std::size_t>(x)), c.point(b, static_cast<std::size_t>(y))};
          if (!oracle_cone(gens, negated(c.point(i, s)))) continue;
          Transversal t{static_cast<int>(i), {-1, -1, -1}};
          t.choice[a] = x;
          t.choice[b] = y;
          expected.push_back(t);
        }
      EXPECT_EQ(transversals_spanning(c, i, s), expected) << "colour " << i << " point " << s;
    }
}

TEST(OctahedronLemma, PlanarCrossExample) {
  // Sides {(1,0),(-1,e)} and {(0,1),(e,-1)} with e = 1/10.
  const Rat e(1, 10);
  const std::vector<Coords> first{pt({1, 0}), pt({0, 1})};
  const std::vector<Coords> second{{Rat(-1), e}, {e, Rat(-1)}};
  std::vector<Coords> probes;
  for (auto [x, y] : {std::pair{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}})
    probes.push_back(pt({x, y}));
  const auto r = octahedron_lemma_check(first, second, probes);
  // The axis probes lie on lines spanned by a single generator.
  EXPECT_EQ(r.skipped, (std::vector<std::size_t>{0, 2, 4, 6}));
  for (std::size_t p = 0; p < probes.size(); ++p) {
    if (r.counts[p] < 0) continue;
    // Independent count from 2x2 solves.
    int expected = 0;
    for (int mask = 0; mask < 4; ++mask) {
      std::vector<Coords> gens{mask & 1 ? second[0] : first[0], mask & 2 ? second[1] : first[1]};
      expected += oracle_cone(gens, probes[p]);
    }
    EXPECT_EQ(r.counts[p], expected) << p;
    EXPECT_EQ(r.counts[p] % 2, 1) << p;
  }
  EXPECT_TRUE(r.dichotomy_holds);
  EXPECT_TRUE(r.parity_constant);
}

TEST(OctahedronLemma, RightHalfPlaneNeverCountsOne) {
  const std::vector<Coords> first{pt({1, 3}), pt({2, -1})};
  const std::vector<Coords> second{pt({3, -5}), pt({1, 1})};
  std::vector<Coords> probes{pt({-1, 0})};
  for (int k = 0; k < 24; ++k) probes.push_back(pt({7 - k, 3 * k - 31}));
  const auto r = octahedron_lemma_check(first, second, probes);
  EXPECT_EQ(r.counts[0], 0);
  for (int c : r.counts) EXPECT_NE(c, 1);
  EXPECT_TRUE(r.ok());
}

TEST(OctahedronLemma, TableSuiteMatchesDirectCheck) {
  const auto c = random_full(3, 9);
  const Engine engine(c);
  Rng rng(1);
  const auto extra = generic_directions(c, 8, rng);
  const OctahedronSuite suite(engine, extra);
  std::vector<Coords> probes;
  for (const auto& p : c.all_points()) probes.push_back(negated(p));
  for (const auto& x : extra) {
    Coords q;
    for (const auto& v : x) q.emplace_back(v);
    probes.push_back(q);
  }
  for (int k = 0; k < 40; ++k) {
    const Octahedron oct = random_octahedron(4, rng);
    const auto a = suite.check(oct);
    const auto b = octahedron_lemma_check(c, oct, probes);
    EXPECT_EQ(a.counts, b.counts);
    EXPECT_EQ(a.skipped, b.skipped);
    EXPECT_TRUE(a.ok());
  }
}

TEST(OctahedronLemma, EveryOctahedronOfRandomConfigurations) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto c = seed % 2 ? random_diamond(2 + seed % 3, seed) : random_full(2 + seed % 2, seed);
    const auto sweep = octahedron_sweep(Engine(c), 32, seed);
    EXPECT_EQ(sweep.violations, 0u);
    EXPECT_GT(sweep.octahedra, 0u);
  }
}

TEST(OctahedronLemma, OctahedronOwnsTwoToTheDTransversals) {
  const Octahedron oct{1, {0, -1, 2, 1}, {2, -1, 0, 3}};
  std::set<Transversal> members;
  for (std::uint64_t m = 0; m < 8; ++m) members.insert(oct.member(m));
  EXPECT_EQ(members.size(), 8u);
}

TEST(ProofTrace, W2CollectsEverySimplex) {
  const auto c = w2();
  const auto r = enumerate_depth(c);
  for (std::size_t q = 0; q < 3; ++q) {
    const auto t = proof_trace(c, q);
    EXPECT_GE(t.collected.size(), 5u);
    EXPECT_EQ(t.collected, r.simplices);
  }
}

TEST(ProofTrace, CollectedSetsAreVerifiedSubsets) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const std::size_t d = 2 + seed % 3;
    const auto c = random_full(d, seed);
    const Engine engine(c);
    const auto r = engine.report();
    const std::set<IndexVector> all(r.simplices.begin(), r.simplices.end());
    for (std::size_t q = 0; q <= d; ++q) {
      const auto t = proof_trace(engine, q);
      EXPECT_TRUE(std::includes(all.begin(), all.end(), t.collected.begin(), t.collected.end()));
      EXPECT_GE(static_cast<std::int64_t>(t.collected.size()), t.guaranteed);
      EXPECT_GE(static_cast<std::int64_t>(t.collected.size()), theorem_bound(static_cast<std::int64_t>(d)));
      if (t.branch == TraceBranch::small_l) {
        EXPECT_GE(static_cast<std::int64_t>(t.choice.coverage) - 1 + t.b_hat, static_cast<std::int64_t>(d));
        EXPECT_EQ(t.choice.transversal.choice.size(), d + 1);
        EXPECT_EQ(t.octahedra.size(), d);
      } else {
        EXPECT_EQ(t.duplicates + t.components, d + 1);
      }
    }
  }
}

TEST(ProofTrace, LeastCoverageBoundsDepth) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t d = 2 + seed % 2;
    const auto r = enumerate_depth(random_full(d, seed));
    for (const auto& row : r.cov) EXPECT_LE(*std::min_element(row.begin(), row.end()) * (d + 1), r.depth);
  }
}

TEST(ProofTrace, RejectsDiamondConfigurations) {
  EXPECT_THROW(proof_trace(diamond_d2(), 0), Error);
}

TEST(Bounds, Examples) {
  const auto v4 = bound_formulas(4);
  EXPECT_EQ(v4.theorem, 13);
  EXPECT_EQ(v4.prior_best, 12);
  EXPECT_EQ(v4.linear, 8);
  EXPECT_EQ(*v4.triple, 12);
  EXPECT_EQ(*v4.fifth, 4);
  EXPECT_EQ(v4.quarter_square, 9);
  EXPECT_EQ(bound_formulas(2).theorem, 5);
  const auto v = bound_formulas(4, 3, 2, 3, 2);
  EXPECT_EQ(v.octahedral_sum, 13);
  EXPECT_EQ(v.octahedral, 13);
  EXPECT_EQ(v.coverage, 15);
  EXPECT_EQ(v.components, 12);
  EXPECT_EQ(v.large_l, 13);
}

TEST(Bounds, OctahedralIdentityHoldsEverywhere) {
  for (std::int64_t d = 1; d <= 12; ++d)
    for (std::int64_t b = 0; b <= d; ++b)
      for (std::int64_t l = 0; l <= d + 1; ++l) {
        const auto v = bound_formulas(d, 0, b, l);
        EXPECT_EQ(v.octahedral_sum, v.octahedral);
      }
}

TEST(Bounds, TheoremIsCeilingOfHalfSquare) {
  for (std::int64_t d = 1; d <= 30; ++d) {
    const std::int64_t sq = (d + 1) * (d + 1);
    EXPECT_EQ(theorem_bound(d), sq / 2 + sq % 2);
  }
}
