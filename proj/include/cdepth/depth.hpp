#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <variant>
#include <vector>

#include "cdepth/configuration.hpp"
#include "cdepth/geometry.hpp"
#include "cdepth/indices.hpp"
#include "cdepth/parallel.hpp"

namespace cdepth {

/// Colourful simplicial depth of the origin together with the simplices that
/// realise it. cov[i][s] counts the transversals missing colour i that span
/// the antipode of point (i, s).
struct DepthReport {
  std::size_t d = 0;
  std::uint64_t depth = 0;
  std::vector<IndexVector> simplices;
  std::vector<std::vector<std::uint64_t>> cov;
};

/// Integer view of a configuration with per-transversal antipode spans
/// precomputed. mask(i, t) has bit s set iff the î-transversal with index t
/// spans the antipode of point (i, s).
class Engine {
 public:
  /// Probe vectors passed later to spans_probe() may use up to `probe_bits`
  /// bits per coordinate.
  explicit Engine(const Configuration& config, unsigned threads = 1, std::size_t probe_bits = 24)
      : config_(&config), codec_(config.colours()) {
    const std::size_t d = config.dim();
    std::size_t bits = 0;
    for (const auto& p : config.directions())
      for (const BigInt& v : p) bits = std::max(bits, detail::bit_length(v));
    const double n = static_cast<double>(d);
    const double minor_bits = (n - 1) * bits + 0.5 * (n - 1) * std::log2(std::max(1.0, n - 1));
    const bool probes_fit = minor_bits + static_cast<double>(probe_bits) + std::log2(n) + 3 < 126;
    if (fits_int128(bits, d) && probes_fit) {
      points_ = build<Int128>();
    } else {
      points_ = build<BigInt>();
    }
    std::visit([&](const auto& p) { fill_masks(p, threads); }, points_);
  }

  const Configuration& config() const { return *config_; }
  const TransversalCodec& codec() const { return codec_; }
  std::size_t colours() const { return codec_.colours(); }
  bool fast_path() const { return std::holds_alternative<IntPoints<Int128>>(points_); }

  std::uint64_t mask(std::size_t colour, std::size_t t) const { return masks_[colour][t]; }

  /// Flat ids (colour-major) of the points of a transversal, colours ascending.
  std::vector<std::size_t> point_ids(const Transversal& t) const {
    std::vector<std::size_t> ids;
    for (std::size_t q = 0; q < colours(); ++q)
      if (static_cast<int>(q) != t.missing) ids.push_back(config_->flat(q, static_cast<std::size_t>(t.choice[q])));
    return ids;
  }

  /// Runs f(points) on the integer point table (Int128 or BigInt).
  template <class F>
  decltype(auto) visit(F&& f) const {
    return std::visit(std::forward<F>(f), points_);
  }

  /// For every î-transversal, which of `probes` (primitive integer
  /// directions) it spans: result[t][p / 64] bit p % 64.
  std::vector<std::vector<std::uint64_t>> probe_table(std::size_t colour, std::span<const std::vector<BigInt>> probes,
                                                      unsigned threads = 1) const {
    const std::size_t words = (probes.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> table(codec_.count(), std::vector<std::uint64_t>(words, 0));
    visit([&](const auto& pts) {
      using Int = std::decay_t<decltype(pts[0][0])>;
      std::vector<std::vector<Int>> xs;
      for (const auto& p : probes) xs.push_back(to_int_vector<Int>(p));
      parallel_ranges(codec_.count(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t) {
          const auto frame = frame_of(pts, codec_.decode(static_cast<int>(colour), t));
          for (std::size_t p = 0; p < xs.size(); ++p)
            if (frame.spans(xs[p])) table[t][p / 64] |= std::uint64_t{1} << (p % 64);
        }
      });
    });
    return table;
  }

  DepthReport report() const {
    const std::size_t n = colours();
    DepthReport r;
    r.d = config_->dim();
    // Odometer order: the transversal missing the last colour enumerates the
    // leading coordinates lexicographically, the last coordinate runs fastest.
    const std::size_t last = n - 1;
    for (std::size_t t = 0; t < codec_.count(); ++t) {
      const std::uint64_t m = masks_[last][t];
      if (m == 0) continue;
      const Transversal tr = codec_.decode(static_cast<int>(last), t);
      for (std::size_t s = 0; s < n; ++s)
        if (m >> s & 1U) r.simplices.push_back(tr.with(static_cast<int>(s)));
    }
    r.depth = r.simplices.size();
    r.cov.assign(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < codec_.count(); ++t)
        for (std::size_t s = 0; s < n; ++s) r.cov[i][s] += masks_[i][t] >> s & 1U;
    return r;
  }

  /// Whether the simplex named by v contains the origin, read off the table
  /// for the given singled-out colour.
  bool contains_origin(const IndexVector& v, std::size_t colour) const {
    Transversal t{static_cast<int>(colour), v.entries};
    t.choice[colour] = -1;
    return masks_[colour][codec_.index(t)] >> v[colour] & 1U;
  }

 private:
  template <class Int>
  IntPoints<Int> build() const {
    const std::size_t d = config_->dim();
    IntPoints<Int> pts(d);
    for (const auto& p : config_->directions()) pts.push_back(to_int_vector<Int>(p));
    return pts;
  }

  template <class Int>
  ConeFrame<Int> frame_of(const IntPoints<Int>& pts, const Transversal& t) const {
    const auto ids = point_ids(t);
    auto frame = make_frame(pts, ids);
    if (!frame) throw Error(ErrorKind::degenerate, "transversal " + to_string(t) + " is linearly dependent");
    return *std::move(frame);
  }

  template <class Int>
  void fill_masks(const IntPoints<Int>& pts, unsigned threads) {
    const std::size_t n = colours();
    masks_.assign(n, std::vector<std::uint64_t>(codec_.count(), 0));
    std::vector<std::vector<Int>> antipodes;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::vector<Int> a(pts[i].begin(), pts[i].end());
      for (Int& x : a) x = -x;
      antipodes.push_back(std::move(a));
    }
    for (std::size_t i = 0; i < n; ++i) {
      parallel_ranges(codec_.count(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t) {
          const auto frame = frame_of(pts, codec_.decode(static_cast<int>(i), t));
          std::uint64_t m = 0;
          for (std::size_t s = 0; s < n; ++s)
            if (frame.spans(antipodes[config_->flat(i, s)])) m |= std::uint64_t{1} << s;
          masks_[i][t] = m;
        }
      });
    }
  }

  const Configuration* config_;
  TransversalCodec codec_;
  std::variant<IntPoints<Int128>, IntPoints<BigInt>> points_;
  std::vector<std::vector<std::uint64_t>> masks_;
};

/// Counts every colourful simplex containing the origin, exhaustively.
inline DepthReport enumerate_depth(const Configuration& config, unsigned threads = 1) {
  return Engine(config, threads).report();
}

/// The î-transversals spanning the antipode of point (colour, index), in
/// index order.
inline std::vector<Transversal> transversals_spanning(const Engine& engine, std::size_t colour, std::size_t index) {
  std::vector<Transversal> out;
  for (std::size_t t = 0; t < engine.codec().count(); ++t)
    if (engine.mask(colour, t) >> index & 1U) out.push_back(engine.codec().decode(static_cast<int>(colour), t));
  return out;
}

inline std::vector<Transversal> transversals_spanning(const Configuration& config, std::size_t colour,
                                                      std::size_t index) {
  return transversals_spanning(Engine(config), colour, index);
}

}  // namespace cdepth
