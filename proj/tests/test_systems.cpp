#include <gtest/gtest.h>

#include "support.hpp"

using namespace cdepth;
using namespace testing_support;

TEST(VectorSystem, SetSemantics) {
  const VectorSystem s(2, {iv({2, 1, 1}), iv({1, 1, 1}), iv({2, 1, 1})});
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.vectors().front(), iv({1, 1, 1}));
  EXPECT_TRUE(s.contains(iv({2, 1, 1})));
  EXPECT_THROW(VectorSystem(2, {iv({1, 1})}), Error);
  EXPECT_THROW(VectorSystem(2, {iv({1, 1, 4})}), Error);
}

TEST(Property1, Examples) {
  std::vector<IndexVector> all;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) all.push_back(iv({a, b, c}));
  EXPECT_TRUE(check_property1(VectorSystem(2, all)));
  const auto r = check_property1(VectorSystem(2, {iv({1, 1, 1})}));
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.position, 0);
  EXPECT_EQ(r.value, 1);
  EXPECT_TRUE(check_property1(VectorSystem(2, {iv({1, 1, 1}), iv({2, 2, 2}), iv({3, 3, 3})})));
}

TEST(Property1, ImpliesAtLeastDPlusOneVectors) {
  Rng rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = 1 + rng.below(3);
    const auto s = random_system(d, rng, 1 + rng.below(120));
    const bool p1 = check_property1(s).ok;
    EXPECT_EQ(p1, naive_property1(s));
    if (p1) EXPECT_GE(s.size(), d + 1);
  }
}

TEST(Property2, SingleVectorViolation) {
  const auto r = check_property2(VectorSystem(2, {iv({1, 1, 1})}));
  ASSERT_FALSE(r.ok);
  ASSERT_TRUE(r.violation);
  EXPECT_EQ(r.violation->missing, 2);
  EXPECT_EQ(r.violation->first, (std::vector<int>{0, 0, -1}));
  EXPECT_EQ(r.violation->second, (std::vector<int>{1, 1, -1}));
  EXPECT_EQ(r.violation->counts[0], 1u);
  EXPECT_EQ(r.violation->counts[1], 0u);
}

TEST(Property2, EmptySystemHolds) { EXPECT_TRUE(check_property2(VectorSystem(2, {}))); }

TEST(Property2, AgreesWithNaiveDefinition) {
  Rng rng(17);
  int holds = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t d = 1 + rng.below(3);
    const auto s = random_system(d, rng, rng.below(400));
    const bool expected = naive_property2(s);
    holds += expected;
    EXPECT_EQ(check_property2(s).ok, expected);
  }
  // Random systems rarely have the property; make sure both verdicts occur.
  EXPECT_GT(holds, 0);
}

TEST(Property2, AgreesOnSystemsBuiltToSatisfyIt) {
  // Unions of symmetric differences of extracted systems keep the parity
  // property; they give many positive cases.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t d = 2 + seed % 2;
    const auto a = extract_system(random_full(d, seed));
    const auto b = extract_system(random_diamond(d, seed + 100));
    std::vector<IndexVector> x;
    std::set_symmetric_difference(a.vectors().begin(), a.vectors().end(), b.vectors().begin(), b.vectors().end(),
                                  std::back_inserter(x));
    const VectorSystem s(d, x);
    EXPECT_TRUE(naive_property2(s));
    EXPECT_TRUE(check_property2(s).ok);
  }
}

TEST(Properties, InvariantUnderTheGroup) {
  Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + rng.below(3);
    const auto s = trial % 2 ? extract_system(random_full(d, static_cast<std::uint64_t>(trial)))
                             : random_system(d, rng, rng.below(300));
    const auto g = random_group_element(d + 1, rng);
    const auto t = apply(g, s);
    EXPECT_EQ(check_property1(s).ok, check_property1(t).ok);
    EXPECT_EQ(check_property2(s).ok, check_property2(t).ok);
  }
}

TEST(CanonicalForm, Examples) {
  EXPECT_EQ(canonical_form(VectorSystem(2, {iv({2, 2, 2})})), canonical_form(VectorSystem(2, {iv({1, 1, 1})})));
  EXPECT_EQ(canonical_form(VectorSystem(2, {iv({1, 2, 3})})), canonical_form(VectorSystem(2, {iv({3, 2, 1})})));
  EXPECT_NE(canonical_form(VectorSystem(2, {iv({1, 1, 1}), iv({2, 2, 2})})),
            canonical_form(VectorSystem(2, {iv({1, 1, 1}), iv({1, 1, 2})})));
}

TEST(CanonicalForm, ConstantOnOrbits) {
  Rng rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = 1 + rng.below(3);
    const auto s = random_system(d, rng, 30 + rng.below(200));
    const auto canon = canonical_form(s);
    EXPECT_EQ(canon.size(), s.size());
    for (int k = 0; k < 100; ++k) ASSERT_EQ(canonical_form(apply(random_group_element(d + 1, rng), s)), canon);
  }
}

TEST(CanonicalForm, SeparatesOrbitsOfSmallSystems) {
  // Brute force over the whole d=2 group: two systems share a canonical form
  // iff some group element maps one to the other.
  const std::size_t d = 2;
  std::vector<GroupElement> group;
  std::vector<int> pos{0, 1, 2};
  do {
    std::vector<int> a{0, 1, 2};
    do {
      std::vector<int> b{0, 1, 2};
      do {
        std::vector<int> c{0, 1, 2};
        do group.push_back({pos, {a, b, c}});
        while (std::next_permutation(c.begin(), c.end()));
      } while (std::next_permutation(b.begin(), b.end()));
    } while (std::next_permutation(a.begin(), a.end()));
  } while (std::next_permutation(pos.begin(), pos.end()));
  ASSERT_EQ(group.size(), 1296u);
  Rng rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const auto s = random_system(d, rng, 150);
    const auto t = random_system(d, rng, 150);
    if (s.size() != t.size()) continue;
    bool equivalent = false;
    for (const auto& g : group) equivalent = equivalent || apply(g, s) == t;
    EXPECT_EQ(canonical_form(s) == canonical_form(t), equivalent);
  }
}

TEST(DuplicateAnalysis, Examples) {
  const auto star = duplicate_component_analysis(
      {{iv({1, 1, 1}), iv({2, 1, 1})}, {iv({1, 1, 1}), iv({1, 2, 1})}, {iv({1, 1, 1}), iv({1, 1, 2})}}, 2);
  EXPECT_EQ(star.duplicates, 2u);
  EXPECT_EQ(star.components, 1u);
  const auto apart = duplicate_component_analysis(
      {{iv({1, 1, 1}), iv({2, 1, 1})}, {iv({3, 2, 3}), iv({3, 3, 3})}, {iv({2, 3, 1}), iv({2, 3, 2})}}, 2);
  EXPECT_EQ(apart.duplicates, 0u);
  EXPECT_EQ(apart.components, 3u);
}

TEST(DuplicateAnalysis, RejectsMalformedFamilies) {
  EXPECT_THROW(duplicate_component_analysis({{iv({1, 1, 1}), iv({1, 2, 1})}, {iv({1, 1, 1})}, {iv({1, 1, 1})}}, 2),
               Error);
  EXPECT_THROW(duplicate_component_analysis({{iv({1, 1, 1})}, {}, {iv({1, 1, 1})}}, 2), Error);
  EXPECT_THROW(duplicate_component_analysis({{iv({1, 1, 1})}, {iv({1, 1, 1})}}, 2), Error);
}

TEST(DuplicateAnalysis, CountsAddUpOnRandomFamilies) {
  Rng rng(12);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t d = 2 + rng.below(3), n = d + 1;
    // Small value range so that lines meet often.
    const int range = 1 + static_cast<int>(rng.below(n));
    std::vector<std::vector<IndexVector>> family(n);
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      IndexVector base{std::vector<int>(n)};
      for (auto& e : base.entries) e = static_cast<int>(rng.below(static_cast<std::uint64_t>(range)));
      const std::size_t size = 1 + rng.below(n);
      for (std::size_t k = 0; k < size; ++k) {
        IndexVector v = base;
        v[i] = static_cast<int>(rng.below(n));
        family[i].push_back(v);
      }
      std::sort(family[i].begin(), family[i].end());
      family[i].erase(std::unique(family[i].begin(), family[i].end()), family[i].end());
      total += family[i].size();
    }
    const auto r = duplicate_component_analysis(family, d);
    EXPECT_EQ(r.duplicates + r.components, n);
    EXPECT_LE(r.duplicates, d);
    // Duplicates are exactly the size of the union deficit.
    std::vector<IndexVector> all;
    for (const auto& x : family) all.insert(all.end(), x.begin(), x.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    EXPECT_EQ(total - all.size(), r.duplicates);
  }
}

TEST(Extract, W2GivesAFiveVectorSystem) {
  const auto s = extract_system(w2());
  EXPECT_EQ(s.size(), 5u);
  EXPECT_TRUE(check_property1(s));
  EXPECT_TRUE(check_property2(s));
  EXPECT_TRUE(naive_property2(s));
}

TEST(Extract, PropertiesOfRandomConfigurations) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t d = 2 + seed % 2;
    const auto full = extract_system(random_full(d, seed));
    EXPECT_TRUE(check_property1(full));
    EXPECT_TRUE(check_property2(full));
    const auto diamond = extract_system(random_diamond(d, seed));
    EXPECT_TRUE(check_property2(diamond));
    EXPECT_FALSE(diamond.empty());
  }
  EXPECT_TRUE(check_property2(extract_system(diamond_d2())));
}
