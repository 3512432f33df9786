#pragma once

// Seeded random configurations and the witness finders built on them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cdepth/configuration.hpp"
#include "cdepth/depth.hpp"
#include "cdepth/rng.hpp"

namespace cdepth {

struct RandomSpec {
  std::size_t d = 2;
  std::int64_t bound = 100;  // coordinates in [-bound, bound]
  std::uint64_t seed = 0;
  CoreMode mode = CoreMode::full;
  std::uint64_t attempts = 100000;

  void validate() const {
    if (d == 0) throw Error(ErrorKind::invalid_argument, "d must be positive");
    if (bound < 1) throw Error(ErrorKind::invalid_argument, "coordinate bound must be at least 1");
    if (attempts == 0) throw Error(ErrorKind::invalid_argument, "attempt budget must be positive");
  }
};

namespace detail {

inline Coords random_point(std::size_t d, std::int64_t bound, Rng& rng) {
  while (true) {
    Coords p(d);
    bool zero = true;
    for (auto& x : p) {
      const std::int64_t v = rng.uniform(-bound, bound);
      x = v;
      zero = zero && v == 0;
    }
    if (!zero) return p;
  }
}

/// d+1 points whose hull has the origin inside, or nothing after `tries`.
inline std::optional<std::vector<Coords>> random_core_class(std::size_t d, std::int64_t bound, Rng& rng,
                                                            std::uint64_t& tries) {
  while (tries > 0) {
    --tries;
    std::vector<Coords> cls;
    for (std::size_t s = 0; s <= d; ++s) cls.push_back(random_point(d, bound, rng));
    if (is_general_position(cls, d).ok && origin_in_hull_interior(cls)) return cls;
  }
  return std::nullopt;
}

inline std::optional<Configuration> try_create(std::size_t d, std::vector<std::vector<Coords>> classes, CoreMode mode,
                                               nlohmann::ordered_json provenance) {
  try {
    return Configuration::create(d, std::move(classes), mode, std::move(provenance));
  } catch (const Error&) {
    return std::nullopt;
  }
}

inline nlohmann::ordered_json random_provenance(const std::string& generator, const RandomSpec& spec,
                                                std::uint64_t attempts) {
  nlohmann::ordered_json p;
  p["generator"] = generator;
  p["rng"] = std::string(Rng::algorithm);
  p["seed"] = spec.seed;
  p["bound"] = spec.bound;
  p["attempts"] = attempts;
  return p;
}

}  // namespace detail

/// A valid configuration drawn by rejection. Full mode draws each colour
/// class until its hull contains the origin, diamond mode draws all points at
/// once; both then require distinctness and general position overall. An
/// attempt is one drawn class (full) or one drawn configuration (diamond).
inline Configuration random_configuration(const RandomSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  const std::size_t d = spec.d, n = d + 1;
  std::uint64_t tries = spec.attempts;
  while (tries > 0) {
    std::vector<std::vector<Coords>> classes;
    if (spec.mode == CoreMode::full) {
      for (std::size_t c = 0; c < n; ++c) {
        auto cls = detail::random_core_class(d, spec.bound, rng, tries);
        if (!cls) break;
        classes.push_back(std::move(*cls));
      }
      if (classes.size() < n) break;
    } else {
      --tries;
      for (std::size_t c = 0; c < n; ++c) {
        classes.emplace_back();
        for (std::size_t s = 0; s < n; ++s) classes.back().push_back(detail::random_point(d, spec.bound, rng));
      }
    }
    auto config = detail::try_create(d, std::move(classes), spec.mode, {});
    if (config) {
      config->set_provenance(detail::random_provenance("random", spec, spec.attempts - tries));
      return *std::move(config);
    }
  }
  throw Error(ErrorKind::budget_exhausted, "no valid configuration within " + std::to_string(spec.attempts) +
                                               " attempts; try a larger coordinate bound");
}

/// Diamond-core d=2 configuration of depth exactly 3. Colours 1 and 2 are
/// drawn with the origin inside each hull (which already gives the diamond
/// condition); colour 3 is clustered tightly around one random direction so
/// that, with luck, all its antipodes fall in a region covered by a single
/// cone. `budget` counts candidate configurations.
inline Configuration find_diamond_witness_d2(std::uint64_t seed, std::uint64_t budget, std::int64_t bound = 100) {
  Rng rng(seed);
  const std::size_t d = 2;
  std::uint64_t class_tries = budget * 100;
  for (std::uint64_t attempt = 1; attempt <= budget; ++attempt) {
    std::vector<std::vector<Coords>> classes;
    for (int c = 0; c < 2; ++c) {
      auto cls = detail::random_core_class(d, bound, rng, class_tries);
      if (!cls) break;
      classes.push_back(std::move(*cls));
    }
    if (classes.size() < 2) break;
    const Coords centre = detail::random_point(d, bound, rng);
    std::vector<Coords> cluster;
    for (int s = 0; s < 3; ++s) {
      Coords p = centre;
      for (auto& x : p) x = x * 20 + rng.uniform(-5, 5);
      cluster.push_back(std::move(p));
    }
    classes.push_back(std::move(cluster));
    auto config = detail::try_create(d, std::move(classes), CoreMode::diamond, {});
    if (!config || enumerate_depth(*config).depth != 3) continue;
    RandomSpec spec{d, bound, seed, CoreMode::diamond, budget};
    config->set_provenance(detail::random_provenance("find-diamond-d2", spec, attempt));
    return *std::move(config);
  }
  throw Error(ErrorKind::budget_exhausted,
              "no depth-3 diamond configuration within " + std::to_string(budget) + " attempts; try another seed");
}

/// Random full-core configuration whose depth equals `target`, scanning
/// seeds spec.seed, spec.seed+1, ... (at most spec.attempts of them).
inline Configuration find_depth_witness(RandomSpec spec, std::uint64_t target) {
  spec.validate();
  const std::uint64_t first = spec.seed;
  for (std::uint64_t k = 0; k < spec.attempts; ++k) {
    RandomSpec one = spec;
    one.seed = first + k;
    one.attempts = 100000;
    Configuration config = random_configuration(one);
    if (enumerate_depth(config).depth == target) {
      auto p = config.provenance();
      p["target_depth"] = target;
      config.set_provenance(p);
      return config;
    }
  }
  throw Error(ErrorKind::budget_exhausted, "no configuration of depth " + std::to_string(target) + " among " +
                                               std::to_string(spec.attempts) + " seeds");
}

}  // namespace cdepth
