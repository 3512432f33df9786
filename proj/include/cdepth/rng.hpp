#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace cdepth {

/// Seeded generator with a platform-independent output stream: the engine is
/// the standard-specified mt19937_64 and bounded draws use plain rejection,
/// never a library distribution.
class Rng {
 public:
  static constexpr std::string_view algorithm = "mt19937_64/rejection";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cdepth
