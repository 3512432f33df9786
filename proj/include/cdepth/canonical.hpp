#pragma once

// Symmetry group of vector systems: permutations of the d+1 positions composed
// with an independent relabelling of the values at each position. Both
// combinatorial properties are invariant under it.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "cdepth/rng.hpp"
#include "cdepth/systems.hpp"

namespace cdepth {

/// Input position q moves to position `positions[q]`; its value x becomes
/// `values[q][x]`.
struct GroupElement {
  std::vector<int> positions;
  std::vector<std::vector<int>> values;
};

inline IndexVector apply(const GroupElement& g, const IndexVector& v) {
  IndexVector w{std::vector<int>(v.size(), 0)};
  for (std::size_t q = 0; q < v.size(); ++q)
    w[static_cast<std::size_t>(g.positions[q])] = g.values[q][static_cast<std::size_t>(v[q])];
  return w;
}

inline VectorSystem apply(const GroupElement& g, const VectorSystem& system) {
  std::vector<IndexVector> out;
  out.reserve(system.size());
  for (const IndexVector& v : system.vectors()) out.push_back(apply(g, v));
  return VectorSystem(system.dim(), std::move(out));
}

namespace detail {

inline std::vector<int> random_permutation(std::size_t n, Rng& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
  return p;
}

}  // namespace detail

inline GroupElement random_group_element(std::size_t n, Rng& rng) {
  GroupElement g;
  g.positions = detail::random_permutation(n, rng);
  for (std::size_t q = 0; q < n; ++q) g.values.push_back(detail::random_permutation(n, rng));
  return g;
}

namespace detail {

/// Canonical row sequence of m rows of n values each (row-major). Output rows
/// are in canonical order.
///
/// Over every position order and every row order, the rows are relabelled
/// value-by-first-appearance per position; the lexicographically least
/// resulting row sequence is the representative. All tied partial labellings
/// advance together one row at a time, so the cost tracks the ties met along
/// the way (automorphisms), not the group order.
inline std::vector<std::uint8_t> canonical_rows(std::span<const std::uint8_t> rows, std::size_t m, std::size_t n) {
  if (m == 0) return {};
  const std::size_t words = (m + 63) / 64;

  struct State {
    std::vector<std::int8_t> key;  // n entries of position order, then n*n labels
    std::vector<std::int8_t> next;
    std::vector<std::uint64_t> used;
  };
  auto label_at = [n](std::size_t q, std::size_t x) { return n + q * n + x; };

  std::vector<State> states;
  std::vector<std::int8_t> order(n);
  std::iota(order.begin(), order.end(), std::int8_t{0});
  do {
    State st;
    st.key.assign(n + n * n, -1);
    std::copy(order.begin(), order.end(), st.key.begin());
    st.next.assign(n, 0);
    st.used.assign(words, 0);
    states.push_back(std::move(st));
  } while (std::next_permutation(order.begin(), order.end()));

  std::vector<std::uint8_t> out;
  out.reserve(m * n);
  std::vector<std::uint8_t> best(n), cand(n);
  std::vector<std::pair<std::size_t, std::size_t>> ties;
  for (std::size_t step = 0; step < m; ++step) {
    ties.clear();
    bool have = false;
    for (std::size_t si = 0; si < states.size(); ++si) {
      const State& st = states[si];
      for (std::size_t r = 0; r < m; ++r) {
        if (st.used[r / 64] >> (r % 64) & 1U) continue;
        const std::uint8_t* row = rows.data() + r * n;
        bool worse = false, better = !have;
        for (std::size_t p = 0; p < n; ++p) {
          const auto q = static_cast<std::size_t>(st.key[p]);
          const std::int8_t lab = st.key[label_at(q, row[q])];
          cand[p] = static_cast<std::uint8_t>(lab >= 0 ? lab : st.next[q]);
          if (!better && !worse) {
            if (cand[p] < best[p]) better = true;
            else if (cand[p] > best[p]) worse = true;
          }
          if (worse) break;
        }
        if (worse) continue;
        if (better) {
          best = cand;
          have = true;
          ties.clear();
        }
        ties.emplace_back(si, r);
      }
    }
    std::vector<State> advanced;
    advanced.reserve(ties.size());
    for (auto [si, r] : ties) {
      State st = states[si];
      st.used[r / 64] |= std::uint64_t{1} << (r % 64);
      const std::uint8_t* row = rows.data() + r * n;
      for (std::size_t q = 0; q < n; ++q) {
        std::int8_t& lab = st.key[label_at(q, row[q])];
        if (lab < 0) lab = st.next[q]++;
      }
      advanced.push_back(std::move(st));
    }
    // The used set is determined by the labelling, so the key identifies a state.
    std::sort(advanced.begin(), advanced.end(), [](const State& a, const State& b) { return a.key < b.key; });
    advanced.erase(std::unique(advanced.begin(), advanced.end(),
                               [](const State& a, const State& b) { return a.key == b.key; }),
                   advanced.end());
    states = std::move(advanced);
    out.insert(out.end(), best.begin(), best.end());
  }
  return out;
}

}  // namespace detail

/// Orbit representative under position permutations and per-position value
/// relabellings: canonical_form(g·V) == canonical_form(V) for every g.
inline VectorSystem canonical_form(const VectorSystem& system) {
  const std::size_t n = system.dim() + 1;
  const std::size_t m = system.size();
  std::vector<std::uint8_t> rows;
  rows.reserve(m * n);
  for (const IndexVector& v : system.vectors())
    for (int x : v.entries) rows.push_back(static_cast<std::uint8_t>(x));
  const auto canon = detail::canonical_rows(rows, m, n);
  std::vector<IndexVector> out;
  for (std::size_t r = 0; r < m; ++r) out.push_back(IndexVector{std::vector<int>(canon.begin() + static_cast<std::ptrdiff_t>(r * n), canon.begin() + static_cast<std::ptrdiff_t>((r + 1) * n))});
  return VectorSystem(system.dim(), std::move(out));
}

}  // namespace cdepth
