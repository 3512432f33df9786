#pragma once

// Finite systems of index vectors in {1..d+1}^{d+1} and the two combinatorial
// properties that colourful-simplex systems satisfy.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cdepth/error.hpp"
#include "cdepth/indices.hpp"

namespace cdepth {

/// A set of index vectors of length d+1 with entries in 0..d, kept sorted.
class VectorSystem {
 public:
  VectorSystem() = default;
  VectorSystem(std::size_t d, std::vector<IndexVector> vectors) : d_(d), vectors_(std::move(vectors)) {
    if (d == 0) throw Error(ErrorKind::invalid_argument, "system dimension must be at least 1");
    for (const IndexVector& v : vectors_) {
      if (v.size() != d + 1) throw Error(ErrorKind::invalid_argument, "vector " + to_string(v) + " has wrong length");
      for (int x : v.entries)
        if (x < 0 || x > static_cast<int>(d)) throw Error(ErrorKind::invalid_argument, "entry out of range in vector");
    }
    std::sort(vectors_.begin(), vectors_.end());
    vectors_.erase(std::unique(vectors_.begin(), vectors_.end()), vectors_.end());
  }

  std::size_t dim() const { return d_; }
  std::size_t size() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  const std::vector<IndexVector>& vectors() const { return vectors_; }
  bool contains(const IndexVector& v) const { return std::binary_search(vectors_.begin(), vectors_.end(), v); }

  bool operator==(const VectorSystem&) const = default;

 private:
  std::size_t d_ = 0;
  std::vector<IndexVector> vectors_;
};

/// Every value appears in every position. On failure names the first missing
/// (position, value) pair, zero-based, in position-major order.
struct Property1Result {
  bool ok = true;
  int position = -1;
  int value = -1;
  explicit operator bool() const { return ok; }
};

inline Property1Result check_property1(const VectorSystem& system) {
  const std::size_t n = system.dim() + 1;
  std::vector<char> seen(n * n, 0);
  for (const IndexVector& v : system.vectors())
    for (std::size_t q = 0; q < n; ++q) seen[q * n + static_cast<std::size_t>(v[q])] = 1;
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t s = 0; s < n; ++s)
      if (!seen[q * n + s]) return {false, static_cast<int>(q), static_cast<int>(s)};
  return {};
}

/// Combinatorial octahedron: position `missing` is free, every other position
/// q is restricted to {first[q], second[q]}. `counts[s]` is the number of
/// system vectors inside it with value s at the free position.
struct CombOctahedron {
  int missing = 0;
  std::vector<int> first;
  std::vector<int> second;
  std::vector<std::uint64_t> counts;
};

struct Property2Result {
  bool ok = true;
  std::optional<CombOctahedron> violation;
  explicit operator bool() const { return ok; }
};

/// Visits every octahedron box missing `missing` once, as the pair of
/// coordinate-wise smaller and larger choices, in lexicographic order of the
/// per-position value pairs. f(first, second) returns false to stop.
template <class F>
bool for_each_comb_octahedron(std::size_t n, int missing, F&& f) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < static_cast<int>(n); ++a)
    for (int b = a + 1; b < static_cast<int>(n); ++b) pairs.emplace_back(a, b);
  std::vector<std::size_t> free;
  for (std::size_t q = 0; q < n; ++q)
    if (static_cast<int>(q) != missing) free.push_back(q);
  std::vector<std::size_t> digit(free.size(), 0);
  std::vector<int> first(n, -1), second(n, -1);
  while (true) {
    for (std::size_t k = 0; k < free.size(); ++k) {
      first[free[k]] = pairs[digit[k]].first;
      second[free[k]] = pairs[digit[k]].second;
    }
    if (!f(first, second)) return false;
    std::size_t k = free.size();
    while (k > 0 && ++digit[k - 1] == pairs.size()) digit[--k] = 0;
    if (k == 0) return true;
  }
}

/// For every position i and every octahedron on the other positions, the
/// number of vectors inside it with value s at position i has the same parity
/// for all s. Positions are scanned from the last to the first; the first
/// violation found is reported.
inline Property2Result check_property2(const VectorSystem& system) {
  const std::size_t n = system.dim() + 1;
  const std::size_t d = n - 1;
  const TransversalCodec codec(n);
  const std::uint64_t full = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (std::size_t pos = n; pos-- > 0;) {
    const int missing = static_cast<int>(pos);
    // Parity of the number of vectors with value s and this restriction.
    std::vector<std::uint64_t> parity(codec.count(), 0);
    for (const IndexVector& v : system.vectors()) {
      Transversal t{missing, v.entries};
      t.choice[pos] = -1;
      parity[codec.index(t)] ^= std::uint64_t{1} << v[pos];
    }
    Property2Result result;
    for_each_comb_octahedron(n, missing, [&](const std::vector<int>& first, const std::vector<int>& second) {
      const Octahedron oct{missing, first, second};
      std::uint64_t acc = 0;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) acc ^= parity[codec.index(oct.member(mask))];
      if (acc == 0 || acc == full) return true;
      CombOctahedron bad{missing, first, second, std::vector<std::uint64_t>(n, 0)};
      for (const IndexVector& v : system.vectors()) {
        bool inside = true;
        for (std::size_t q = 0; q < n && inside; ++q)
          inside = q == pos || v[q] == first[q] || v[q] == second[q];
        if (inside) ++bad.counts[static_cast<std::size_t>(v[pos])];
      }
      result = {false, std::move(bad)};
      return false;
    });
    if (!result.ok) return result;
  }
  return {};
}

/// Multi-membership count k and connectivity class count c of a family
/// X_1..X_{d+1} where X_i varies only in coordinate i.
struct DuplicateAnalysis {
  std::size_t duplicates = 0;
  std::size_t components = 0;
};

inline DuplicateAnalysis duplicate_component_analysis(const std::vector<std::vector<IndexVector>>& family,
                                                      std::size_t d) {
  const std::size_t n = d + 1;
  if (family.size() != n) throw Error(ErrorKind::invalid_argument, "family needs exactly d+1 sets");
  std::vector<std::vector<IndexVector>> sets;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<IndexVector> x = family[i];
    if (x.empty()) throw Error(ErrorKind::invalid_argument, "family set " + std::to_string(i + 1) + " is empty");
    for (const IndexVector& v : x) {
      if (v.size() != n) throw Error(ErrorKind::invalid_argument, "vector of wrong length in family");
      for (int e : v.entries)
        if (e < 0 || e > static_cast<int>(d)) throw Error(ErrorKind::invalid_argument, "entry out of range in family");
      for (std::size_t q = 0; q < n; ++q)
        if (q != i && v[q] != x.front()[q])
          throw Error(ErrorKind::invalid_argument,
                      "family set " + std::to_string(i + 1) + " varies outside coordinate " + std::to_string(i + 1));
    }
    std::sort(x.begin(), x.end());
    x.erase(std::unique(x.begin(), x.end()), x.end());
    sets.push_back(std::move(x));
  }

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::size_t total = 0;
  std::vector<IndexVector> all;
  for (std::size_t i = 0; i < n; ++i) {
    total += sets[i].size();
    all.insert(all.end(), sets[i].begin(), sets[i].end());
    for (std::size_t j = 0; j < i; ++j) {
      const bool shared = std::any_of(sets[i].begin(), sets[i].end(), [&](const IndexVector& v) {
        return std::binary_search(sets[j].begin(), sets[j].end(), v);
      });
      if (shared) parent[find(i)] = find(j);
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  DuplicateAnalysis out;
  out.duplicates = total - all.size();
  for (std::size_t i = 0; i < n; ++i) out.components += find(i) == i ? 1 : 0;
  return out;
}

}  // namespace cdepth
