#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cdepth/error.hpp"
#include "cdepth/geometry.hpp"
#include "cdepth/rational.hpp"

namespace cdepth {

/// Which hypothesis on the origin a configuration satisfies: interior to every
/// colour class (full), or only to every union of two classes (diamond).
enum class CoreMode { full, diamond };

inline std::string to_string(CoreMode mode) { return mode == CoreMode::full ? "full" : "diamond"; }

inline CoreMode parse_core_mode(std::string_view s) {
  if (s == "full") return CoreMode::full;
  if (s == "diamond") return CoreMode::diamond;
  throw Error(ErrorKind::parse, "unknown mode '" + std::string(s) + "'");
}

/// A configuration point. Colour and index are zero-based here; files and
/// reports number colours and points from 1.
struct GeoPoint {
  Coords coords;
  int colour = 0;
  int index = 0;
};

/// Outcome of a core-condition test. `violation` holds the offending colour
/// (full mode) or colour pair (diamond mode), zero-based.
struct CoreCheck {
  bool ok = true;
  std::vector<int> violation;
  explicit operator bool() const { return ok; }
};

/// (d+1) colour classes of (d+1) points each in R^d, with the reference point
/// at the origin. Instances are always valid: pairwise-distinct nonzero points
/// in general position satisfying the core condition of their mode.
class Configuration {
 public:
  /// classes[c][s] is point s of colour c. Throws Error on the first violated
  /// invariant.
  static Configuration create(std::size_t d, std::vector<std::vector<Coords>> classes, CoreMode mode,
                              nlohmann::ordered_json provenance = nlohmann::ordered_json::object());

  std::size_t dim() const { return d_; }
  std::size_t colours() const { return d_ + 1; }
  /// Points per colour class; equals colours().
  std::size_t class_size() const { return d_ + 1; }
  CoreMode mode() const { return mode_; }
  const nlohmann::ordered_json& provenance() const { return provenance_; }
  void set_provenance(nlohmann::ordered_json p) { provenance_ = std::move(p); }

  const Coords& point(std::size_t colour, std::size_t index) const { return classes_[colour][index]; }
  GeoPoint geo_point(std::size_t colour, std::size_t index) const {
    return {point(colour, index), static_cast<int>(colour), static_cast<int>(index)};
  }
  const std::vector<std::vector<Coords>>& classes() const { return classes_; }

  /// Flat colour-major position of point (colour, index).
  std::size_t flat(std::size_t colour, std::size_t index) const { return colour * (d_ + 1) + index; }
  /// Primitive integer directions, colour-major.
  std::span<const std::vector<BigInt>> directions() const { return directions_; }
  std::vector<Coords> all_points() const {
    std::vector<Coords> out;
    for (const auto& cls : classes_) out.insert(out.end(), cls.begin(), cls.end());
    return out;
  }

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.d_ == b.d_ && a.mode_ == b.mode_ && a.classes_ == b.classes_;
  }

 private:
  Configuration() = default;

  std::size_t d_ = 0;
  CoreMode mode_ = CoreMode::full;
  std::vector<std::vector<Coords>> classes_;
  std::vector<std::vector<BigInt>> directions_;
  nlohmann::ordered_json provenance_ = nlohmann::ordered_json::object();
};

namespace detail {

inline std::vector<Coords> union_of(const std::vector<std::vector<Coords>>& classes, std::initializer_list<std::size_t> which) {
  std::vector<Coords> pts;
  for (std::size_t c : which) pts.insert(pts.end(), classes[c].begin(), classes[c].end());
  return pts;
}

inline CoreCheck core_check(const std::vector<std::vector<Coords>>& classes, CoreMode mode) {
  const std::size_t k = classes.size();
  if (mode == CoreMode::full) {
    for (std::size_t i = 0; i < k; ++i)
      if (!origin_in_hull_interior(classes[i])) return {false, {static_cast<int>(i)}};
    return {};
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (!origin_in_hull_interior(union_of(classes, {i, j}))) return {false, {static_cast<int>(i), static_cast<int>(j)}};
  return {};
}

}  // namespace detail

/// Full mode: 0 interior to conv(S_i) for each i. Diamond mode: 0 interior to
/// conv(S_i ∪ S_j) for each i < j. The configuration's own mode is ignored.
inline CoreCheck check_core_conditions(const Configuration& config, CoreMode mode) {
  return detail::core_check(config.classes(), mode);
}

inline Configuration Configuration::create(std::size_t d, std::vector<std::vector<Coords>> classes, CoreMode mode,
                                           nlohmann::ordered_json provenance) {
  if (d == 0) throw Error(ErrorKind::invalid_argument, "dimension must be at least 1");
  if (classes.size() != d + 1)
    throw Error(ErrorKind::class_size, "expected " + std::to_string(d + 1) + " colour classes, got " +
                                           std::to_string(classes.size()));
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].size() != d + 1)
      throw Error(ErrorKind::class_size, "colour " + std::to_string(c + 1) + " has " +
                                             std::to_string(classes[c].size()) + " points, expected " +
                                             std::to_string(d + 1));
    for (std::size_t s = 0; s < classes[c].size(); ++s) {
      const Coords& p = classes[c][s];
      const std::string where = "point " + std::to_string(s + 1) + " of colour " + std::to_string(c + 1);
      if (p.size() != d) throw Error(ErrorKind::invalid_argument, where + " has the wrong dimension");
      bool zero = true;
      for (const Rat& x : p) zero = zero && x == 0;
      if (zero) throw Error(ErrorKind::zero_point, where + " is the origin");
    }
  }

  Configuration cfg;
  cfg.d_ = d;
  cfg.mode_ = mode;
  cfg.classes_ = std::move(classes);
  cfg.provenance_ = std::move(provenance);

  const auto pts = cfg.all_points();
  std::set<Coords> seen;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!seen.insert(pts[i]).second)
      throw Error(ErrorKind::not_distinct, "point " + std::to_string(i % (d + 1) + 1) + " of colour " +
                                               std::to_string(i / (d + 1) + 1) + " repeats an earlier point");
  }
  for (const Coords& p : pts) cfg.directions_.push_back(primitive_direction(p));

  const GeneralPosition gp =
      with_int_points(cfg.directions_, d, [](const auto& ip) { return general_position_of(ip); });
  if (!gp) {
    std::string which;
    for (std::size_t id : gp.violation)
      which += " (" + std::to_string(id / (d + 1) + 1) + "," + std::to_string(id % (d + 1) + 1) + ")";
    throw Error(ErrorKind::degenerate, "not in general position; dependent points (colour,index):" + which);
  }

  const CoreCheck core = detail::core_check(cfg.classes_, mode);
  if (!core) {
    std::string which;
    for (int c : core.violation) which += " " + std::to_string(c + 1);
    throw Error(ErrorKind::core_condition,
                "origin not interior to the hull required by " + to_string(mode) + " mode for colour(s)" + which);
  }
  return cfg;
}

}  // namespace cdepth
