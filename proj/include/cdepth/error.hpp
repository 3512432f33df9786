#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cdepth {

enum class ErrorKind {
  parse,            // malformed numeral or document
  class_size,       // a colour class without exactly d+1 points
  zero_point,       // the origin used as a configuration point
  not_distinct,     // a point repeated within or across classes
  degenerate,       // general position violated
  core_condition,   // origin outside a required convex hull
  invalid_argument,
  budget_exhausted,
  proof_violation,  // a counting step of the lower-bound argument failed
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::class_size: return "class size";
    case ErrorKind::zero_point: return "zero point";
    case ErrorKind::not_distinct: return "points not distinct";
    case ErrorKind::degenerate: return "degenerate input";
    case ErrorKind::core_condition: return "core condition";
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::budget_exhausted: return "budget exhausted";
    case ErrorKind::proof_violation: return "proof violation";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cdepth
