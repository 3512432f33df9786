#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>

namespace cdepth {

/// Every counting bound the lower-bound argument and the earlier literature
/// use, evaluated exactly for one parameter tuple.
struct BoundValues {
  std::int64_t d = 0;
  // Counts from the argument, in terms of the trace parameters.
  std::int64_t coverage = 0;         // j(d+1)
  std::int64_t octahedral_sum = 0;   // l + b(d+1-l) + (d-b)l
  std::int64_t octahedral = 0;       // (d+1)(b+l) - 2bl
  std::int64_t components = 0;       // (d+1)(l-1) + c
  std::int64_t large_l = 0;          // dl + 1
  std::int64_t theorem = 0;          // ceil((d+1)^2 / 2)
  // Earlier bounds on the minimum depth.
  std::int64_t linear = 0;                  // 2d
  std::optional<std::int64_t> triple;       // 3d, stated for d >= 3
  std::optional<std::int64_t> fifth;        // ceil(d(d+1)/5), stated for d >= 3
  std::int64_t quarter_square = 0;          // floor((d+2)^2 / 4)
  std::int64_t upper = 0;                   // d^2 + 1
  std::int64_t prior_best = 0;
};

inline std::int64_t theorem_bound(std::int64_t d) { return ((d + 1) * (d + 1) + 1) / 2; }

inline std::int64_t prior_best_bound(std::int64_t d) {
  std::int64_t best = std::max(2 * d, (d + 2) * (d + 2) / 4);
  if (d >= 3) best = std::max({best, 3 * d, (d * (d + 1) + 4) / 5});
  return best;
}

inline BoundValues bound_formulas(std::int64_t d, std::int64_t j = 0, std::int64_t b = 0, std::int64_t l = 0,
                                  std::int64_t c = 0) {
  BoundValues v;
  v.d = d;
  v.coverage = j * (d + 1);
  v.octahedral_sum = l + b * (d + 1 - l) + (d - b) * l;
  v.octahedral = (d + 1) * (b + l) - 2 * b * l;
  v.components = (d + 1) * (l - 1) + c;
  v.large_l = d * l + 1;
  v.theorem = theorem_bound(d);
  v.linear = 2 * d;
  if (d >= 3) {
    v.triple = 3 * d;
    v.fifth = (d * (d + 1) + 4) / 5;
  }
  v.quarter_square = (d + 2) * (d + 2) / 4;
  v.upper = d * d + 1;
  v.prior_best = prior_best_bound(d);
  return v;
}

}  // namespace cdepth
