#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cdepth/error.hpp"

namespace cdepth {

/// One point index per colour: entry q names a point of colour class q.
/// Zero-based; rendered one-based.
struct IndexVector {
  std::vector<int> entries;

  std::size_t size() const { return entries.size(); }
  int operator[](std::size_t q) const { return entries[q]; }
  int& operator[](std::size_t q) { return entries[q]; }
  auto operator<=>(const IndexVector&) const = default;
  bool operator==(const IndexVector&) const = default;
};

inline std::string to_string(const IndexVector& v) {
  std::string out = "(";
  for (std::size_t q = 0; q < v.size(); ++q) {
    if (q) out += ",";
    out += std::to_string(v[q] + 1);
  }
  return out + ")";
}

/// A colourful choice of d points missing colour `missing`. `choice` has one
/// slot per colour; the missing slot holds -1.
struct Transversal {
  int missing = 0;
  std::vector<int> choice;
  auto operator<=>(const Transversal&) const = default;
  bool operator==(const Transversal&) const = default;

  /// The simplex obtained by adding point `s` of the missing colour.
  IndexVector with(int s) const {
    IndexVector v{choice};
    v[static_cast<std::size_t>(missing)] = s;
    return v;
  }
};

inline std::string to_string(const Transversal& t) {
  std::string out = "(";
  for (std::size_t q = 0; q < t.choice.size(); ++q) {
    if (q) out += ",";
    out += t.choice[q] < 0 ? std::string("-") : std::to_string(t.choice[q] + 1);
  }
  return out + ")";
}

/// Pair of transversals missing the same colour and differing in every other
/// colour; it owns the 2^d transversals picking either side per colour.
struct Octahedron {
  int missing = 0;
  std::vector<int> first;
  std::vector<int> second;

  void validate() const {
    if (first.size() != second.size()) throw Error(ErrorKind::invalid_argument, "octahedron sides differ in length");
    for (std::size_t q = 0; q < first.size(); ++q) {
      if (static_cast<int>(q) == missing) continue;
      if (first[q] == second[q]) throw Error(ErrorKind::invalid_argument, "octahedron sides are not disjoint");
    }
  }

  std::size_t dim() const { return first.size() - 1; }

  /// Transversal picking `second` on the colours whose bit is set in `mask`
  /// (bits enumerate the non-missing colours in increasing order).
  Transversal member(std::uint64_t mask) const {
    Transversal t{missing, first};
    std::size_t bit = 0;
    for (std::size_t q = 0; q < first.size(); ++q) {
      if (static_cast<int>(q) == missing) continue;
      if (mask >> bit & 1U) t.choice[q] = second[q];
      ++bit;
    }
    t.choice[static_cast<std::size_t>(missing)] = -1;
    return t;
  }
};

/// Mixed-radix codec for transversals missing colour i: the digits are the
/// choices on colours ≠ i in increasing colour order, most significant first,
/// base n = d+1. Index order is lexicographic order of the choices.
class TransversalCodec {
 public:
  explicit TransversalCodec(std::size_t n) : n_(n) {
    count_ = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) count_ *= n;
  }

  std::size_t colours() const { return n_; }
  std::size_t count() const { return count_; }

  std::size_t index(const Transversal& t) const {
    std::size_t idx = 0;
    for (std::size_t q = 0; q < n_; ++q) {
      if (static_cast<int>(q) == t.missing) continue;
      idx = idx * n_ + static_cast<std::size_t>(t.choice[q]);
    }
    return idx;
  }

  Transversal decode(int missing, std::size_t idx) const {
    Transversal t{missing, std::vector<int>(n_, -1)};
    for (std::size_t q = n_; q-- > 0;) {
      if (static_cast<int>(q) == missing) continue;
      t.choice[q] = static_cast<int>(idx % n_);
      idx /= n_;
    }
    return t;
  }

 private:
  std::size_t n_;
  std::size_t count_;
};

}  // namespace cdepth
