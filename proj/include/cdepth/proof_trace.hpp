#pragma once

// Replays the counting argument for the lower bound on a concrete full-core
// configuration: every simplex it claims is collected explicitly, checked
// exactly, and the counts are compared with the guaranteed values.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cdepth/bounds.hpp"
#include "cdepth/config_io.hpp"
#include "cdepth/depth.hpp"
#include "cdepth/systems.hpp"

namespace cdepth {

enum class TraceBranch { small_l, large_l };

inline std::string to_string(TraceBranch b) { return b == TraceBranch::small_l ? "small-l" : "large-l"; }

/// Ω_k = (T_k, T). `spans[s]` lists the members other than T that span the
/// antipode of point s of the branch colour.
struct TraceOctahedron {
  Transversal partner;
  std::vector<std::vector<Transversal>> spans;
  bool spans_all_missing = false;
};

/// Choice made for one colour: least-covered antipode, its coverage, the
/// spanning transversal with most spanned antipodes, and those antipodes.
struct ColourChoice {
  std::size_t colour = 0;
  std::size_t antipode = 0;
  std::uint64_t coverage = 0;
  Transversal transversal;
  std::vector<int> spanned;
};

struct ProofTrace {
  std::size_t d = 0;
  std::size_t requested_colour = 0;
  std::size_t colour = 0;  // colour the branch was run on
  TraceBranch branch = TraceBranch::small_l;
  std::uint64_t depth = 0;
  std::int64_t guaranteed = 0;  // branch bound value
  std::vector<IndexVector> collected;

  // Small-l branch.
  ColourChoice choice;
  /// renumbering[q][k] = original index of the point given index k; T's
  /// point gets index d.
  std::vector<std::vector<int>> renumbering;
  std::vector<TraceOctahedron> octahedra;
  std::int64_t b_hat = 0;
  std::int64_t coverage_bound = 0;
  std::int64_t octahedral_bound = 0;

  // Large-l branch (per colour).
  std::vector<ColourChoice> colour_choices;
  std::vector<std::vector<IndexVector>> families;
  std::vector<IndexVector> m_set;
  std::size_t m_colour = 0;
  std::int64_t l_min = 0;
  std::size_t duplicates = 0;
  std::size_t components = 0;
};

namespace detail {

inline ColourChoice choose_for_colour(const Engine& engine, const DepthReport& report, std::size_t colour) {
  const std::size_t n = engine.colours();
  ColourChoice c;
  c.colour = colour;
  c.antipode = 0;
  for (std::size_t s = 1; s < n; ++s)
    if (report.cov[colour][s] < report.cov[colour][c.antipode]) c.antipode = s;
  c.coverage = report.cov[colour][c.antipode];
  // Codec order is lexicographic, so the first maximiser is the
  // lexicographically smallest.
  int best_l = -1;
  std::size_t best_t = 0;
  for (std::size_t t = 0; t < engine.codec().count(); ++t) {
    const std::uint64_t m = engine.mask(colour, t);
    if (!(m >> c.antipode & 1U)) continue;
    if (std::popcount(m) > best_l) {
      best_l = std::popcount(m);
      best_t = t;
    }
  }
  if (best_l < 0)
    throw Error(ErrorKind::proof_violation, "antipode " + std::to_string(c.antipode + 1) + " of colour " +
                                                std::to_string(colour + 1) + " is spanned by no transversal");
  c.transversal = engine.codec().decode(static_cast<int>(colour), best_t);
  for (std::size_t s = 0; s < n; ++s)
    if (engine.mask(colour, best_t) >> s & 1U) c.spanned.push_back(static_cast<int>(s));
  return c;
}

inline bool spans_antipode(const Engine& engine, const Transversal& t, std::size_t s) {
  return engine.mask(static_cast<std::size_t>(t.missing), engine.codec().index(t)) >> s & 1U;
}

[[noreturn]] inline void violation(const Configuration& config, const std::string& what) {
  throw Error(ErrorKind::proof_violation, what + "\nconfiguration:\n" + serialize_configuration(config));
}

inline void small_l_branch(const Engine& engine, ProofTrace& tr) {
  const Configuration& config = engine.config();
  const std::size_t d = config.dim(), n = d + 1, i = tr.colour;
  const ColourChoice& ch = tr.choice;
  const Transversal& big_t = ch.transversal;

  tr.renumbering.assign(n, {});
  for (std::size_t q = 0; q < n; ++q) {
    if (q == i) continue;
    for (std::size_t s = 0; s < n; ++s)
      if (static_cast<int>(s) != big_t.choice[q]) tr.renumbering[q].push_back(static_cast<int>(s));
    tr.renumbering[q].push_back(big_t.choice[q]);
  }

  std::set<IndexVector> oct_set;
  for (int s : ch.spanned) oct_set.insert(big_t.with(s));
  const auto l = static_cast<std::int64_t>(ch.spanned.size());
  std::set<Transversal> seen_members;
  for (std::size_t k = 0; k < d; ++k) {
    TraceOctahedron om;
    om.partner = Transversal{static_cast<int>(i), std::vector<int>(n, -1)};
    for (std::size_t q = 0; q < n; ++q)
      if (q != i) om.partner.choice[q] = tr.renumbering[q][k];
    om.spans.assign(n, {});
    const Octahedron oct{static_cast<int>(i), om.partner.choice, big_t.choice};
    for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << d); ++mask) {
      const Transversal member = oct.member(mask);  // the all-ones mask is T itself
      if (!seen_members.insert(member).second)
        violation(config, "transversal " + to_string(member) + " appears in two octahedra");
      for (std::size_t s = 0; s < n; ++s)
        if (spans_antipode(engine, member, s)) {
          om.spans[s].push_back(member);
          oct_set.insert(member.with(static_cast<int>(s)));
        }
    }
    om.spans_all_missing = true;
    for (std::size_t s = 0; s < n; ++s)
      if (std::find(ch.spanned.begin(), ch.spanned.end(), static_cast<int>(s)) == ch.spanned.end() &&
          om.spans[s].empty())
        om.spans_all_missing = false;
    tr.b_hat += om.spans_all_missing;
    tr.octahedra.push_back(std::move(om));
  }

  const auto j = static_cast<std::int64_t>(ch.coverage);
  if ((j - 1) + tr.b_hat < static_cast<std::int64_t>(d))
    violation(config, "(j-1)+b = " + std::to_string(j - 1 + tr.b_hat) + " < d");

  // j(d+1): the first j spanning transversals of every antipode.
  std::set<IndexVector> all = oct_set;
  std::size_t cov_collected = 0;
  for (std::size_t s = 0; s < n; ++s) {
    const auto list = transversals_spanning(engine, i, s);
    for (std::size_t r = 0; r < static_cast<std::size_t>(j) && r < list.size(); ++r, ++cov_collected)
      all.insert(list[r].with(static_cast<int>(s)));
  }
  const auto values = bound_formulas(static_cast<std::int64_t>(d), j, tr.b_hat, l);
  tr.coverage_bound = values.coverage;
  tr.octahedral_bound = values.octahedral;
  tr.guaranteed = std::max(values.coverage, values.octahedral);
  if (cov_collected < static_cast<std::size_t>(values.coverage))
    violation(config, "fewer than j transversals span some antipode");
  if (static_cast<std::int64_t>(oct_set.size()) < values.octahedral)
    violation(config, "octahedra yield " + std::to_string(oct_set.size()) + " simplices, fewer than " +
                          std::to_string(values.octahedral));
  if (tr.guaranteed < theorem_bound(static_cast<std::int64_t>(d)))
    violation(config, "small-l bound " + std::to_string(tr.guaranteed) + " is below the theorem bound");
  tr.collected.assign(all.begin(), all.end());
}

inline void large_l_branch(const Engine& engine, ProofTrace& tr) {
  const Configuration& config = engine.config();
  const std::size_t d = config.dim(), n = d + 1;
  tr.l_min = static_cast<std::int64_t>(n);
  for (const ColourChoice& c : tr.colour_choices) {
    std::vector<IndexVector> x;
    for (int s : c.spanned) x.push_back(c.transversal.with(s));
    tr.families.push_back(std::move(x));
    tr.l_min = std::min<std::int64_t>(tr.l_min, static_cast<std::int64_t>(c.spanned.size()));
  }
  const DuplicateAnalysis dup = duplicate_component_analysis(tr.families, d);
  tr.duplicates = dup.duplicates;
  tr.components = dup.components;
  if (dup.duplicates + dup.components != n) violation(config, "k + c differs from d+1");

  std::set<IndexVector> all;
  for (const auto& x : tr.families) all.insert(x.begin(), x.end());
  while (tr.colour_choices[tr.m_colour].spanned.size() != static_cast<std::size_t>(tr.l_min)) ++tr.m_colour;
  const ColourChoice& mc = tr.colour_choices[tr.m_colour];
  for (std::size_t s = 0; s < n; ++s) {
    if (std::find(mc.spanned.begin(), mc.spanned.end(), static_cast<int>(s)) != mc.spanned.end()) continue;
    const auto list = transversals_spanning(engine, tr.m_colour, s);
    if (list.empty()) violation(config, "an antipode outside L generates no simplex");
    // Lexicographically first simplex with this value at the colour.
    IndexVector first = list.front().with(static_cast<int>(s));
    for (const auto& t : list) first = std::min(first, t.with(static_cast<int>(s)));
    tr.m_set.push_back(first);
    all.insert(first);
  }
  tr.guaranteed = static_cast<std::int64_t>(d) * tr.l_min + 1;
  if (static_cast<std::int64_t>(all.size()) < tr.guaranteed)
    violation(config, "large-l branch collected " + std::to_string(all.size()) + " simplices, fewer than dl+1 = " +
                          std::to_string(tr.guaranteed));
  tr.collected.assign(all.begin(), all.end());
}

}  // namespace detail

/// Runs the argument starting from `colour`. When that colour's chosen
/// transversal spans more than (d+1)/2 antipodes, the smallest colour with a
/// small count is used instead; if there is none, the large-l branch runs.
/// Throws Error(proof_violation) with the configuration attached if any
/// counting step fails.
inline ProofTrace proof_trace(const Engine& engine, std::size_t colour) {
  const Configuration& config = engine.config();
  if (config.mode() != CoreMode::full)
    throw Error(ErrorKind::invalid_argument, "proof trace needs a full-core configuration");
  const std::size_t d = config.dim(), n = d + 1;
  if (colour >= n) throw Error(ErrorKind::invalid_argument, "colour out of range");
  const DepthReport report = engine.report();
  ProofTrace tr;
  tr.d = d;
  tr.requested_colour = colour;
  tr.depth = report.depth;

  auto small = [&](const ColourChoice& c) { return 2 * c.spanned.size() <= n; };
  ColourChoice first = detail::choose_for_colour(engine, report, colour);
  if (small(first)) {
    tr.colour = colour;
    tr.choice = std::move(first);
  } else {
    for (std::size_t q = 0; q < n; ++q)
      tr.colour_choices.push_back(q == colour ? first : detail::choose_for_colour(engine, report, q));
    tr.colour = n;
    for (std::size_t q = 0; q < n && tr.colour == n; ++q)
      if (small(tr.colour_choices[q])) tr.colour = q;
    if (tr.colour < n) tr.choice = tr.colour_choices[tr.colour];
  }

  if (tr.colour < n) {
    tr.branch = TraceBranch::small_l;
    detail::small_l_branch(engine, tr);
  } else {
    tr.branch = TraceBranch::large_l;
    tr.colour = colour;
    detail::large_l_branch(engine, tr);
  }

  // Every collected simplex is rechecked from coordinates.
  std::set<IndexVector> listed(report.simplices.begin(), report.simplices.end());
  for (const IndexVector& v : tr.collected) {
    std::vector<Coords> pts;
    for (std::size_t q = 0; q < n; ++q) pts.push_back(config.point(q, static_cast<std::size_t>(v[q])));
    if (!origin_in_simplex(pts) || !listed.count(v))
      detail::violation(config, "collected simplex " + to_string(v) + " does not contain the origin");
  }
  if (static_cast<std::int64_t>(tr.collected.size()) < theorem_bound(static_cast<std::int64_t>(d)))
    detail::violation(config, "collected fewer simplices than the theorem bound");
  return tr;
}

inline ProofTrace proof_trace(const Configuration& config, std::size_t colour) {
  return proof_trace(Engine(config), colour);
}

}  // namespace cdepth
