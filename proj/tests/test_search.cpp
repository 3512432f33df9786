#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "support.hpp"

using namespace cdepth;
using namespace testing_support;

namespace {

SearchCertificate run(std::size_t d, CoreMode mode, std::size_t max_size, bool plain = false, unsigned threads = 1,
                      bool all = false) {
  SearchOptions o;
  o.d = d;
  o.mode = mode;
  o.max_size = max_size;
  o.plain = plain;
  o.threads = threads;
  o.collect_all = all;
  return search_min_system(o);
}

std::vector<IndexVector> cube(std::size_t d) {
  const std::size_t n = d + 1;
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= n;
  std::vector<IndexVector> out;
  for (std::size_t x = 0; x < total; ++x) {
    IndexVector v{std::vector<int>(n)};
    std::size_t y = x;
    for (std::size_t q = n; q-- > 0;) {
      v[q] = static_cast<int>(y % n);
      y /= n;
    }
    out.push_back(v);
  }
  return out;
}

// Every subset of {1,2,3}^3 up to the given size, through the naive checks.
// Returns the canonical forms of the smallest passing systems.
std::set<std::vector<IndexVector>> brute_force_minimum(CoreMode mode, std::size_t max_size) {
  const auto all = cube(2);
  for (std::size_t k = 1; k <= max_size; ++k) {
    std::set<std::vector<IndexVector>> found;
    for_each_combination(all.size(), k, [&](std::span<const std::size_t> ids) {
      std::vector<IndexVector> vs;
      for (auto i : ids) vs.push_back(all[i]);
      const VectorSystem s(2, vs);
      if (mode == CoreMode::full && !naive_property1(s)) return true;
      if (naive_property2(s)) found.insert(canonical_form(s).vectors());
      return true;
    });
    if (!found.empty()) return found;
  }
  return {};
}

}  // namespace

TEST(SearchSpace, Incidences) {
  for (std::size_t d = 1; d <= 3; ++d) {
    const SearchSpace space(d);
    const std::size_t n = d + 1;
    for (std::size_t b = 0; b < space.boxes(); ++b) {
      const auto cells = space.cells_of(b);
      std::set<std::uint32_t> distinct(cells.begin(), cells.end());
      EXPECT_EQ(distinct.size(), std::size_t{1} << n);
      for (std::uint32_t v : cells) {
        const auto boxes = space.boxes_of(v);
        EXPECT_NE(std::find(boxes.begin(), boxes.end(), b), boxes.end());
      }
    }
    for (std::size_t v = 0; v < space.vectors(); ++v) {
      const auto boxes = space.boxes_of(v);
      EXPECT_EQ(std::set<std::uint32_t>(boxes.begin(), boxes.end()).size(), space.boxes_per_vector());
    }
  }
}

TEST(Search, PlanarFullMinimumIsFive) {
  const auto none = run(2, CoreMode::full, 4);
  EXPECT_EQ(none.outcome, SearchOutcome::no_system);
  const auto some = run(2, CoreMode::full, 5);
  ASSERT_EQ(some.outcome, SearchOutcome::witness);
  EXPECT_EQ(some.witness->size(), 5u);
  EXPECT_TRUE(some.witness_verified);
  EXPECT_TRUE(naive_property1(*some.witness));
  EXPECT_TRUE(naive_property2(*some.witness));
}

TEST(Search, PlainAndReducedAgreeInThePlane) {
  for (CoreMode mode : {CoreMode::full, CoreMode::diamond})
    for (std::size_t k = 1; k <= 6; ++k) {
      const auto a = run(2, mode, k, false);
      const auto b = run(2, mode, k, true);
      EXPECT_EQ(a.outcome, b.outcome) << k;
      if (a.witness && b.witness) EXPECT_EQ(a.witness->size(), b.witness->size());
    }
}

TEST(Search, AgreesWithBruteForceInThePlane) {
  const auto full = brute_force_minimum(CoreMode::full, 5);
  ASSERT_FALSE(full.empty());
  EXPECT_EQ(full.begin()->size(), 5u);
  const auto reduced = run(2, CoreMode::full, 5, false, 1, true);
  const auto plain = run(2, CoreMode::full, 5, true, 1, true);
  std::set<std::vector<IndexVector>> r, p;
  for (const auto& w : reduced.all_witnesses) r.insert(canonical_form(w).vectors());
  for (const auto& w : plain.all_witnesses) p.insert(canonical_form(w).vectors());
  EXPECT_EQ(r, full);
  EXPECT_EQ(p, full);

  const auto diamond = brute_force_minimum(CoreMode::diamond, 3);
  ASSERT_FALSE(diamond.empty());
  const auto d_reduced = run(2, CoreMode::diamond, 3, false, 1, true);
  ASSERT_EQ(d_reduced.outcome, SearchOutcome::witness);
  EXPECT_EQ(d_reduced.witness->size(), diamond.begin()->size());
  std::set<std::vector<IndexVector>> dr;
  for (const auto& w : d_reduced.all_witnesses) dr.insert(canonical_form(w).vectors());
  EXPECT_EQ(dr, diamond);
}

TEST(Search, DiamondMinimumInThreeDimensionsIsFour) {
  EXPECT_EQ(run(3, CoreMode::diamond, 3).outcome, SearchOutcome::no_system);
  const auto w = run(3, CoreMode::diamond, 4);
  ASSERT_EQ(w.outcome, SearchOutcome::witness);
  EXPECT_EQ(w.witness->size(), 4u);
  EXPECT_TRUE(w.witness_verified);
  EXPECT_EQ(run(3, CoreMode::diamond, 3, true).outcome, SearchOutcome::no_system);
}

TEST(Search, NoFullSystemOfSizeEightInThreeDimensions) {
  const auto c = run(3, CoreMode::full, 8);
  EXPECT_EQ(c.outcome, SearchOutcome::no_system);
  EXPECT_EQ(run(3, CoreMode::full, 8, true).outcome, SearchOutcome::no_system);
}

TEST(Search, SmallestDimension) {
  // d=1: two points of each colour on a line; {(1,1),(2,2)} is minimal.
  const auto c = run(1, CoreMode::full, 3);
  ASSERT_EQ(c.outcome, SearchOutcome::witness);
  EXPECT_EQ(c.witness->size(), 2u);
}

TEST(Search, DeterministicAcrossThreadCounts) {
  for (bool plain : {false, true}) {
    const auto a = run(3, CoreMode::full, 10, plain, 1);
    const auto b = run(3, CoreMode::full, 10, plain, 4);
    EXPECT_EQ(a.outcome, b.outcome);
    EXPECT_EQ(a.nodes, b.nodes);
    EXPECT_EQ(a.level_nodes, b.level_nodes);
    ASSERT_TRUE(a.witness && b.witness);
    EXPECT_EQ(*a.witness, *b.witness);
  }
}

TEST(Search, BudgetExhaustionIsNotANegativeAnswer) {
  SearchOptions o;
  o.d = 3;
  o.max_size = 9;
  o.node_budget = 10;
  EXPECT_EQ(search_min_system(o).outcome, SearchOutcome::budget_exhausted);
  o.plain = true;
  EXPECT_EQ(search_min_system(o).outcome, SearchOutcome::budget_exhausted);
}

TEST(Search, CheckpointResumes) {
  const auto dir = std::filesystem::temp_directory_path() / "cdepth-checkpoint-test";
  std::filesystem::create_directories(dir);
  const auto file = (dir / "d3.json").string();
  std::filesystem::remove(file);
  SearchOptions o;
  o.d = 3;
  o.max_size = 9;
  o.checkpoint = file;
  o.node_budget = 100;  // stop part way, leaving a checkpoint behind
  EXPECT_EQ(search_min_system(o).outcome, SearchOutcome::budget_exhausted);
  ASSERT_TRUE(std::filesystem::exists(file));
  o.node_budget = 0;
  const auto resumed = search_min_system(o);
  const auto fresh = run(3, CoreMode::full, 9);
  EXPECT_EQ(resumed.outcome, fresh.outcome);
  EXPECT_EQ(resumed.nodes, fresh.nodes);
  EXPECT_EQ(resumed.level_nodes, fresh.level_nodes);
  o.max_size = 8;
  EXPECT_THROW(search_min_system(o), Error);
  std::filesystem::remove_all(dir);
}

TEST(Search, RejectsUnsupportedSettings) {
  SearchOptions o;
  o.d = 5;
  o.max_size = 3;
  EXPECT_THROW(search_min_system(o), Error);
  o.d = 2;
  o.max_size = 0;
  EXPECT_THROW(search_min_system(o), Error);
}

TEST(Search, CertificateDescribesTheGroup) {
  const auto c = run(2, CoreMode::full, 4);
  EXPECT_NE(c.group.find("order 1296"), std::string::npos);
  EXPECT_NE(render(c, Format::human).find("nodes"), std::string::npos);
  EXPECT_EQ(render(c, Format::json), render(c, Format::json));
}
