#pragma once

// Test helpers and independent reference implementations. The oracles here
// use textbook methods (Leibniz expansion, rational Gaussian elimination,
// literal property definitions) and share no code with the library's
// algorithms beyond the number types.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cdepth/cdepth.hpp"

#ifndef CDEPTH_DATA_DIR
#define CDEPTH_DATA_DIR "data"
#endif

namespace testing_support {

using namespace cdepth;

inline Coords pt(std::initializer_list<long long> xs) {
  Coords c;
  for (long long x : xs) c.emplace_back(x);
  return c;
}

inline IndexVector iv(std::initializer_list<int> one_based) {
  IndexVector v;
  for (int x : one_based) v.entries.push_back(x - 1);
  return v;
}

inline std::string data_file(const std::string& name) {
  std::ifstream in(std::string(CDEPTH_DATA_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Configuration w2() { return parse_configuration(data_file("w2.json")); }
inline Configuration diamond_d2() { return parse_configuration(data_file("diamond_d2.json")); }

/// Determinant by the Leibniz permutation sum.
inline Rat leibniz_det(const std::vector<Coords>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rat total = 0;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) inversions += perm[a] > perm[b];
    Rat term = inversions % 2 ? -1 : 1;
    for (std::size_t r = 0; r < n; ++r) term *= m[r][perm[r]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Solves sum_k x_k * cols[k] = rhs exactly; nullopt if singular.
inline std::optional<std::vector<Rat>> solve(const std::vector<Coords>& cols, const Coords& rhs) {
  const std::size_t n = rhs.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = cols[c][r];
    a[r][n] = rhs[r];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rat f = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = a[r][n] / a[r][r];
  return x;
}

/// x strictly inside the cone of the columns.
inline bool oracle_cone(const std::vector<Coords>& gens, const Coords& x) {
  const auto mu = solve(gens, x);
  if (!mu) return false;
  return std::all_of(mu->begin(), mu->end(), [](const Rat& v) { return v > 0; });
}

/// Barycentric coordinates of the origin: solve sum l_k p_k = 0, sum l_k = 1.
inline bool oracle_origin_in_simplex(const std::vector<Coords>& pts) {
  const std::size_t d = pts.size() - 1;
  std::vector<Coords> cols;
  for (const auto& p : pts) {
    Coords c = p;
    c.push_back(1);
    cols.push_back(c);
  }
  Coords rhs(d + 1, 0);
  rhs[d] = 1;
  const auto l = solve(cols, rhs);
  if (!l) return false;
  return std::all_of(l->begin(), l->end(), [](const Rat& v) { return v > 0; });
}

/// Property 2 exactly as defined: every position i, every pair of disjoint
/// transversals (t, t') on the other positions, every value s.
inline bool naive_property2(const VectorSystem& sys) {
  const std::size_t n = sys.dim() + 1;
  std::size_t tcount = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) tcount *= n;
  auto decode = [&](std::size_t idx, std::size_t skip) {
    std::vector<int> t(n, -1);
    for (std::size_t q = n; q-- > 0;) {
      if (q == skip) continue;
      t[q] = static_cast<int>(idx % n);
      idx /= n;
    }
    return t;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < tcount; ++a)
      for (std::size_t b = 0; b < tcount; ++b) {
        const auto t = decode(a, i), u = decode(b, i);
        bool disjoint = true;
        for (std::size_t q = 0; q < n; ++q)
          if (q != i && t[q] == u[q]) disjoint = false;
        if (!disjoint) continue;
        int parity = -1;
        for (std::size_t s = 0; s < n; ++s) {
          int count = 0;
          for (const auto& v : sys.vectors()) {
            if (v[i] != static_cast<int>(s)) continue;
            bool inside = true;
            for (std::size_t q = 0; q < n; ++q)
              if (q != i && v[q] != t[q] && v[q] != u[q]) inside = false;
            count += inside;
          }
          if (parity >= 0 && count % 2 != parity) return false;
          parity = count % 2;
        }
      }
  return true;
}

inline bool naive_property1(const VectorSystem& sys) {
  const std::size_t n = sys.dim() + 1;
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t s = 0; s < n; ++s) {
      bool used = false;
      for (const auto& v : sys.vectors()) used = used || v[q] == static_cast<int>(s);
      if (!used) return false;
    }
  return true;
}

inline VectorSystem random_system(std::size_t d, Rng& rng, std::uint64_t per_mille) {
  const std::size_t n = d + 1;
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= n;
  std::vector<IndexVector> out;
  for (std::size_t x = 0; x < total; ++x) {
    if (rng.below(1000) >= per_mille) continue;
    IndexVector v{std::vector<int>(n)};
    std::size_t y = x;
    for (std::size_t q = n; q-- > 0;) {
      v[q] = static_cast<int>(y % n);
      y /= n;
    }
    out.push_back(v);
  }
  return VectorSystem(d, out);
}

/// Depth by testing every colourful tuple with the barycentric oracle.
inline std::vector<IndexVector> oracle_simplices(const Configuration& c) {
  const std::size_t n = c.colours();
  std::vector<IndexVector> out;
  std::vector<int> idx(n, 0);
  while (true) {
    std::vector<Coords> pts;
    for (std::size_t q = 0; q < n; ++q) pts.push_back(c.point(q, static_cast<std::size_t>(idx[q])));
    if (oracle_origin_in_simplex(pts)) out.push_back(IndexVector{idx});
    std::size_t q = n;
    while (q-- > 0) {
      if (++idx[q] < static_cast<int>(n)) break;
      idx[q] = 0;
    }
    if (q == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

inline Configuration random_full(std::size_t d, std::uint64_t seed) {
  RandomSpec s;
  s.d = d;
  s.seed = seed;
  return random_configuration(s);
}

inline Configuration random_diamond(std::size_t d, std::uint64_t seed) {
  RandomSpec s;
  s.d = d;
  s.seed = seed;
  s.mode = CoreMode::diamond;
  return random_configuration(s);
}

}  // namespace testing_support
