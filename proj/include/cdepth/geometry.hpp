#pragma once

// Exact sign predicates on points of R^d. Coordinates enter as rationals and
// are immediately replaced by primitive integer directions; all work after
// that is fraction-free integer arithmetic, in a 128-bit fast path when the
// Hadamard bound allows it and in arbitrary precision otherwise.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cdepth/error.hpp"
#include "cdepth/rational.hpp"

namespace cdepth {

__extension__ typedef __int128 Int128;

template <class Int>
inline int sgn(const Int& x) {
  return (x > 0) - (x < 0);
}

/// Determinant of a row-major n×n integer matrix by fraction-free (Bareiss)
/// elimination with row pivoting. Every intermediate value is a minor of the
/// input, so the arithmetic is exact for any integer type wide enough to hold
/// products of two such minors.
template <class Int>
Int bareiss_det(std::vector<Int> a, std::size_t n) {
  if (n == 0) return Int(1);
  int sign = 1;
  Int prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r * n + k] == 0) ++r;
      if (r == n) return Int(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[r * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        a[i * n + j] = t / prev;
      }
    }
    prev = a[k * n + k];
  }
  return sign < 0 ? Int(-a[n * n - 1]) : a[n * n - 1];
}

/// Flat storage of integer points of a fixed dimension.
template <class Int>
class IntPoints {
 public:
  IntPoints() = default;
  explicit IntPoints(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return dim_ == 0 ? 0 : data_.size() / dim_; }
  std::span<const Int> operator[](std::size_t i) const { return {data_.data() + i * dim_, dim_}; }

  void push_back(std::span<const Int> p) { data_.insert(data_.end(), p.begin(), p.end()); }

 private:
  std::size_t dim_ = 0;
  std::vector<Int> data_;
};

/// Precomputed solver for "is x in the open cone of these d generators".
/// Row i of `cramer` dotted with x equals det(G) times the i-th coefficient of
/// x in the generator basis, so only signs need comparing.
template <class Int>
struct ConeFrame {
  std::size_t dim = 0;
  int orientation = 0;
  std::vector<Int> cramer;

  bool spans(std::span<const Int> x) const {
    for (std::size_t i = 0; i < dim; ++i) {
      Int acc(0);
      const Int* row = cramer.data() + i * dim;
      for (std::size_t r = 0; r < dim; ++r) acc += row[r] * x[r];
      if (sgn(acc) * orientation <= 0) return false;
    }
    return true;
  }
};

/// Frame for the cone generated by `pts[ids[0]], ..., pts[ids[d-1]]`, or
/// nullopt when the generators are linearly dependent.
template <class Int>
std::optional<ConeFrame<Int>> make_frame(const IntPoints<Int>& pts, std::span<const std::size_t> ids) {
  const std::size_t d = pts.dim();
  ConeFrame<Int> frame;
  frame.dim = d;
  frame.cramer.assign(d * d, Int(0));
  std::vector<Int> minor((d - 1) * (d - 1));
  for (std::size_t col = 0; col < d; ++col) {
    for (std::size_t row = 0; row < d; ++row) {
      // Generator matrix G has G[r][c] = pts[ids[c]][r]; drop row `row` and column `col`.
      std::size_t w = 0;
      for (std::size_t r = 0; r < d; ++r) {
        if (r == row) continue;
        for (std::size_t c = 0; c < d; ++c) {
          if (c == col) continue;
          minor[w++] = pts[ids[c]][r];
        }
      }
      Int cof = bareiss_det(minor, d - 1);
      if ((row + col) % 2 == 1) cof = -cof;
      frame.cramer[col * d + row] = cof;
    }
  }
  Int det(0);
  for (std::size_t r = 0; r < d; ++r) det += pts[ids[0]][r] * frame.cramer[r];
  frame.orientation = sgn(det);
  if (frame.orientation == 0) return std::nullopt;
  return frame;
}

template <class Int>
Int det_of_rows(const IntPoints<Int>& pts, std::span<const std::size_t> ids) {
  const std::size_t d = pts.dim();
  std::vector<Int> m;
  m.reserve(d * d);
  for (std::size_t id : ids) {
    auto p = pts[id];
    m.insert(m.end(), p.begin(), p.end());
  }
  return bareiss_det(std::move(m), d);
}

/// Calls f(subset) for every k-subset of {0..n-1} in lexicographic order
/// until f returns false. Returns false iff stopped early.
inline bool for_each_combination(std::size_t n, std::size_t k,
                                 const std::function<bool(std::span<const std::size_t>)>& f) {
  if (k > n) return true;
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), std::size_t{0});
  while (true) {
    if (!f(c)) return false;
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return true;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

namespace detail {

inline std::size_t bit_length(const BigInt& v) {
  return v == 0 ? 0 : boost::multiprecision::msb(boost::multiprecision::abs(v)) + 1;
}

}  // namespace detail

/// True when determinants of size `dim` over entries of at most `bits` bits,
/// and the Bareiss products leading to them, fit in a signed 128-bit integer.
inline bool fits_int128(std::size_t bits, std::size_t dim) {
  const double n = static_cast<double>(std::max<std::size_t>(dim, 1));
  const double hadamard_bits = n * static_cast<double>(bits) + 0.5 * n * std::log2(n);
  return 2.0 * hadamard_bits + std::log2(n) + 3.0 < 126.0;
}

/// Runs f on an IntPoints built from `dirs`, picking Int128 when safe and
/// BigInt otherwise. `extra_bits` accounts for probe vectors that will later
/// be tested against frames built from these points.
template <class F>
decltype(auto) with_int_points(std::span<const std::vector<BigInt>> dirs, std::size_t dim, F&& f,
                               std::size_t extra_bits = 0) {
  std::size_t bits = extra_bits;
  for (const auto& p : dirs)
    for (const BigInt& v : p) bits = std::max(bits, detail::bit_length(v));
  if (fits_int128(bits, dim)) {
    IntPoints<Int128> pts(dim);
    std::vector<Int128> buf(dim);
    for (const auto& p : dirs) {
      for (std::size_t i = 0; i < dim; ++i) buf[i] = static_cast<Int128>(p[i].convert_to<long long>());
      pts.push_back(buf);
    }
    return f(pts);
  }
  IntPoints<BigInt> pts(dim);
  for (const auto& p : dirs) pts.push_back(p);
  return f(pts);
}

template <class Int>
std::vector<Int> to_int_vector(std::span<const BigInt> v) {
  std::vector<Int> out;
  out.reserve(v.size());
  for (const BigInt& x : v) {
    if constexpr (std::is_same_v<Int, BigInt>) {
      out.push_back(x);
    } else {
      out.push_back(static_cast<Int>(x.convert_to<long long>()));
    }
  }
  return out;
}

namespace detail {

inline std::size_t common_dimension(std::span<const Coords> points) {
  if (points.empty()) return 0;
  const std::size_t d = points.front().size();
  for (const Coords& p : points)
    if (p.size() != d) throw Error(ErrorKind::invalid_argument, "points of mixed dimension");
  return d;
}

inline std::vector<std::vector<BigInt>> directions(std::span<const Coords> points) {
  std::vector<std::vector<BigInt>> out;
  out.reserve(points.size());
  for (const Coords& p : points) out.push_back(primitive_direction(p));
  return out;
}

}  // namespace detail

/// Exact sign of det(M) for a square rational matrix.
inline int det_sign(const std::vector<Coords>& m) {
  const std::size_t n = m.size();
  for (const Coords& row : m)
    if (row.size() != n) throw Error(ErrorKind::invalid_argument, "det_sign needs a square matrix");
  if (n == 0) return 1;
  // Scaling a row by a positive factor keeps the sign of the determinant.
  const auto rows = detail::directions(m);
  return with_int_points(rows, n, [n](const auto& pts) {
    std::vector<std::size_t> ids(n);
    std::iota(ids.begin(), ids.end(), std::size_t{0});
    return sgn(det_of_rows(pts, ids));
  });
}

/// Result of a general-position test; `violation` lists the indices of a
/// linearly dependent d-subset when the test fails.
struct GeneralPosition {
  bool ok = true;
  std::vector<std::size_t> violation;
  explicit operator bool() const { return ok; }
};

template <class Int>
GeneralPosition general_position_of(const IntPoints<Int>& pts) {
  GeneralPosition result;
  const std::size_t d = pts.dim();
  for_each_combination(pts.size(), d, [&](std::span<const std::size_t> ids) {
    if (det_of_rows(pts, ids) == 0) {
      result.ok = false;
      result.violation.assign(ids.begin(), ids.end());
      return false;
    }
    return true;
  });
  return result;
}

/// Every d-element subset of `points` is linearly independent.
inline GeneralPosition is_general_position(std::span<const Coords> points, std::size_t d) {
  for (const Coords& p : points)
    if (p.size() != d) throw Error(ErrorKind::invalid_argument, "point dimension differs from d");
  if (d == 0) return {};
  const auto dirs = detail::directions(points);
  return with_int_points(dirs, d, [](const auto& pts) { return general_position_of(pts); });
}

/// x lies in the open cone of the d generators in `gens`.
inline bool cone_spans(std::span<const Coords> gens, const Coords& x) {
  const std::size_t d = x.size();
  if (gens.size() != d) throw Error(ErrorKind::invalid_argument, "a cone needs exactly d generators");
  if (detail::common_dimension(gens) != d && d != 0)
    throw Error(ErrorKind::invalid_argument, "generator dimension differs from probe dimension");
  auto dirs = detail::directions(gens);
  const auto probe = primitive_direction(x);
  std::size_t probe_bits = 0;
  for (const BigInt& v : probe) probe_bits = std::max(probe_bits, detail::bit_length(v));
  return with_int_points(
      dirs, d,
      [&](const auto& pts) {
        using Int = std::decay_t<decltype(pts[0][0])>;
        std::vector<std::size_t> ids(d);
        std::iota(ids.begin(), ids.end(), std::size_t{0});
        auto frame = make_frame(pts, ids);
        if (!frame) throw Error(ErrorKind::degenerate, "cone generators are linearly dependent");
        const auto xs = to_int_vector<Int>(probe);
        return frame->spans(xs);
      },
      probe_bits);
}

inline Coords negated(const Coords& p) {
  Coords out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = -p[i];
  return out;
}

/// 0 is interior to the simplex on d+1 points in general position; decided
/// as "the antipode of the last point is spanned by the first d".
inline bool origin_in_simplex(std::span<const Coords> points) {
  if (points.empty()) throw Error(ErrorKind::invalid_argument, "empty simplex");
  const std::size_t d = detail::common_dimension(points);
  if (points.size() != d + 1) throw Error(ErrorKind::invalid_argument, "a simplex in R^d needs d+1 points");
  if (!is_general_position(points, d)) throw Error(ErrorKind::degenerate, "simplex vertices not in general position");
  return cone_spans(points.first(d), negated(points.back()));
}

/// 0 is interior to conv(points): a Caratheodory search over (d+1)-subsets.
/// A subset in general position containing 0 settles the question even when
/// other points are degenerate; a negative answer needs the whole set in
/// general position, where hull and interior membership coincide.
inline bool origin_in_hull_interior(std::span<const Coords> points) {
  if (points.empty()) return false;
  const std::size_t d = detail::common_dimension(points);
  const auto dirs = detail::directions(points);
  return with_int_points(dirs, d, [&](const auto& pts) {
    using Int = std::decay_t<decltype(pts[0][0])>;
    bool found = false;
    for_each_combination(pts.size(), d + 1, [&](std::span<const std::size_t> ids) {
      std::vector<std::size_t> face(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(d));
      for (std::size_t drop = 0; drop <= d; ++drop) {
        if (drop < d) face[drop] = ids[d];
        const bool independent = det_of_rows(pts, face) != 0;
        if (drop < d) face[drop] = ids[drop];
        if (!independent) return true;
      }
      auto frame = make_frame(pts, ids.first(d));
      std::vector<Int> anti(pts[ids[d]].begin(), pts[ids[d]].end());
      for (Int& v : anti) v = -v;
      found = frame && frame->spans(anti);
      return !found;
    });
    if (!found && !general_position_of(pts)) throw Error(ErrorKind::degenerate, "points not in general position");
    return found;
  });
}

}  // namespace cdepth
