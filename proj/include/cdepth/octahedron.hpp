#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cdepth/depth.hpp"
#include "cdepth/rng.hpp"

namespace cdepth {

/// Span counts of one octahedron at a list of probe directions. A skipped
/// probe (non-generic for the octahedron) has count -1 and takes no part in
/// the two verdicts.
struct OctahedronReport {
  bool parity_constant = true;
  bool dichotomy_holds = true;
  std::vector<int> counts;
  std::vector<std::size_t> skipped;

  bool ok() const { return parity_constant && dichotomy_holds; }
};

namespace detail {

inline void settle(OctahedronReport& r) {
  bool some_zero = false, some_one = false, some_even = false, some_odd = false;
  for (int c : r.counts) {
    if (c < 0) continue;
    some_zero = some_zero || c == 0;
    some_one = some_one || c == 1;
    (c % 2 ? some_odd : some_even) = true;
  }
  r.dichotomy_holds = !(some_zero && some_one);
  r.parity_constant = !(some_odd && some_even);
}

}  // namespace detail

/// Octahedron with sides `first` and `second` (d points each, side k of both
/// sharing a colour) probed at `probes`. A probe lying in the span of d-1 of
/// the 2d points is reported in `skipped`.
inline OctahedronReport octahedron_lemma_check(std::span<const Coords> first, std::span<const Coords> second,
                                               std::span<const Coords> probes) {
  const std::size_t d = first.size();
  if (second.size() != d || d == 0) throw Error(ErrorKind::invalid_argument, "octahedron sides need d points each");
  std::vector<Coords> all(first.begin(), first.end());
  all.insert(all.end(), second.begin(), second.end());
  all.insert(all.end(), probes.begin(), probes.end());
  if (detail::common_dimension(all) != d) throw Error(ErrorKind::invalid_argument, "dimension mismatch");
  const auto dirs = detail::directions(all);

  OctahedronReport report;
  with_int_points(dirs, d, [&](const auto& pts) {
    using Int = std::decay_t<decltype(pts[0][0])>;
    std::vector<ConeFrame<Int>> frames;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
      std::vector<std::size_t> ids(d);
      for (std::size_t k = 0; k < d; ++k) ids[k] = (mask >> k & 1U) ? d + k : k;
      auto frame = make_frame(pts, ids);
      if (!frame) throw Error(ErrorKind::degenerate, "octahedron transversal is linearly dependent");
      frames.push_back(*std::move(frame));
    }
    for (std::size_t p = 0; p < probes.size(); ++p) {
      const std::size_t probe_id = 2 * d + p;
      bool generic = true;
      if (d == 1) {
        generic = sgn(pts[probe_id][0]) != 0;
      } else {
        for_each_combination(2 * d, d - 1, [&](std::span<const std::size_t> ids) {
          std::vector<std::size_t> rows(ids.begin(), ids.end());
          rows.push_back(probe_id);
          generic = det_of_rows(pts, rows) != 0;
          return generic;
        });
      }
      if (!generic) {
        report.skipped.push_back(p);
        report.counts.push_back(-1);
        continue;
      }
      int count = 0;
      for (const auto& f : frames) count += f.spans(pts[probe_id]) ? 1 : 0;
      report.counts.push_back(count);
    }
  });
  detail::settle(report);
  return report;
}

inline OctahedronReport octahedron_lemma_check(const Configuration& config, const Octahedron& oct,
                                               std::span<const Coords> probes) {
  oct.validate();
  if (oct.first.size() != config.colours()) throw Error(ErrorKind::invalid_argument, "octahedron has wrong arity");
  std::vector<Coords> a, b;
  for (std::size_t q = 0; q < config.colours(); ++q) {
    if (static_cast<int>(q) == oct.missing) continue;
    a.push_back(config.point(q, static_cast<std::size_t>(oct.first[q])));
    b.push_back(config.point(q, static_cast<std::size_t>(oct.second[q])));
  }
  return octahedron_lemma_check(a, b, probes);
}

/// Random nonzero integer directions in [-bound, bound]^d, each outside the
/// linear span of every d-1 configuration points.
inline std::vector<std::vector<BigInt>> generic_directions(const Configuration& config, std::size_t count, Rng& rng,
                                                           std::int64_t bound = 1000) {
  const std::size_t d = config.dim();
  std::vector<std::vector<BigInt>> out;
  std::vector<std::vector<BigInt>> dirs(config.directions().begin(), config.directions().end());
  while (out.size() < count) {
    std::vector<BigInt> x(d);
    bool zero = true;
    for (auto& v : x) {
      v = rng.uniform(-bound, bound);
      zero = zero && v == 0;
    }
    if (zero) continue;
    dirs.push_back(x);
    const bool generic = with_int_points(dirs, d, [&](const auto& pts) {
      const std::size_t probe = pts.size() - 1;
      if (d == 1) return true;
      return for_each_combination(probe, d - 1, [&](std::span<const std::size_t> ids) {
        std::vector<std::size_t> rows(ids.begin(), ids.end());
        rows.push_back(probe);
        return det_of_rows(pts, rows) != 0;
      });
    });
    dirs.pop_back();
    if (generic) out.push_back(std::move(x));
  }
  return out;
}

/// Calls f(oct) for every octahedron missing `missing`, each unordered pair
/// once (first side has the smaller transversal index).
template <class F>
void for_each_octahedron(std::size_t n, int missing, F&& f) {
  const TransversalCodec codec(n);
  for (std::size_t a = 0; a < codec.count(); ++a) {
    const Transversal ta = codec.decode(missing, a);
    for (std::size_t b = a + 1; b < codec.count(); ++b) {
      const Transversal tb = codec.decode(missing, b);
      bool disjoint = true;
      for (std::size_t q = 0; q < n && disjoint; ++q)
        disjoint = static_cast<int>(q) == missing || ta.choice[q] != tb.choice[q];
      if (disjoint) f(Octahedron{missing, ta.choice, tb.choice});
    }
  }
}

inline Octahedron random_octahedron(std::size_t n, Rng& rng) {
  Octahedron oct{static_cast<int>(rng.below(n)), std::vector<int>(n, -1), std::vector<int>(n, -1)};
  for (std::size_t q = 0; q < n; ++q) {
    if (static_cast<int>(q) == oct.missing) continue;
    oct.first[q] = static_cast<int>(rng.below(n));
    oct.second[q] = static_cast<int>(rng.below(n - 1));
    if (oct.second[q] >= oct.first[q]) ++oct.second[q];
  }
  return oct;
}

/// Table-driven octahedron checks against one fixed probe list: every
/// configuration antipode (flat colour-major) followed by `extra` directions.
/// Under general position the only non-generic antipodes for an octahedron
/// are those of its own points, which are skipped.
class OctahedronSuite {
 public:
  OctahedronSuite(const Engine& engine, std::span<const std::vector<BigInt>> extra, unsigned threads = 1)
      : engine_(&engine) {
    const Configuration& config = engine.config();
    for (const auto& p : config.directions()) {
      std::vector<BigInt> a = p;
      for (auto& v : a) v = -v;
      probes_.push_back(std::move(a));
    }
    probes_.insert(probes_.end(), extra.begin(), extra.end());
    for (std::size_t i = 0; i < config.colours(); ++i) tables_.push_back(engine.probe_table(i, probes_, threads));
  }

  std::size_t probe_count() const { return probes_.size(); }

  OctahedronReport check(const Octahedron& oct) const {
    const Configuration& config = engine_->config();
    const std::size_t d = config.dim();
    const auto& table = tables_[static_cast<std::size_t>(oct.missing)];
    std::vector<std::size_t> members;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask)
      members.push_back(engine_->codec().index(oct.member(mask)));
    std::vector<char> own(config.colours() * config.colours(), 0);
    for (std::size_t q = 0; q < config.colours(); ++q) {
      if (static_cast<int>(q) == oct.missing) continue;
      own[config.flat(q, static_cast<std::size_t>(oct.first[q]))] = 1;
      own[config.flat(q, static_cast<std::size_t>(oct.second[q]))] = 1;
    }
    OctahedronReport report;
    for (std::size_t p = 0; p < probes_.size(); ++p) {
      if (p < own.size() && own[p]) {
        report.skipped.push_back(p);
        report.counts.push_back(-1);
        continue;
      }
      int count = 0;
      for (std::size_t t : members) count += (table[t][p / 64] >> (p % 64)) & 1U;
      report.counts.push_back(count);
    }
    detail::settle(report);
    return report;
  }

 private:
  const Engine* engine_;
  std::vector<std::vector<BigInt>> probes_;
  std::vector<std::vector<std::vector<std::uint64_t>>> tables_;
};

/// Result of checking many octahedra of one configuration.
struct OctahedronSweep {
  std::size_t probes = 0;  // per octahedron, before skipping
  std::uint64_t octahedra = 0;
  std::uint64_t violations = 0;
  std::uint64_t skipped = 0;  // probe checks skipped as non-generic
  std::optional<Octahedron> first_violation;
  std::optional<OctahedronReport> first_violation_report;
};

/// Probes every octahedron (each disjoint transversal pair once, every
/// missing colour) or, when `sample` is positive, that many random ones.
/// The probe list is all antipodes plus `extra` generic directions drawn
/// from `seed`.
inline OctahedronSweep octahedron_sweep(const Engine& engine, std::size_t extra, std::uint64_t seed,
                                        std::uint64_t sample = 0, unsigned threads = 1) {
  Rng rng(seed);
  const auto dirs = generic_directions(engine.config(), extra, rng);
  const OctahedronSuite suite(engine, dirs, threads);
  OctahedronSweep sweep;
  sweep.probes = suite.probe_count();
  auto visit = [&](const Octahedron& oct) {
    const OctahedronReport r = suite.check(oct);
    ++sweep.octahedra;
    sweep.skipped += r.skipped.size();
    if (!r.ok()) {
      if (!sweep.first_violation) {
        sweep.first_violation = oct;
        sweep.first_violation_report = r;
      }
      ++sweep.violations;
    }
  };
  const std::size_t n = engine.colours();
  if (sample == 0) {
    for (std::size_t m = 0; m < n; ++m) for_each_octahedron(n, static_cast<int>(m), visit);
  } else {
    for (std::uint64_t k = 0; k < sample; ++k) visit(random_octahedron(n, rng));
  }
  return sweep;
}

}  // namespace cdepth
