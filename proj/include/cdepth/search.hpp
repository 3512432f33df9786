#pragma once

// Exhaustive search for the smallest vector systems satisfying the parity
// property (and, in full mode, the covering property).
//
// Parity is tracked per box: a box is a product of one value pair per
// position, 2^(d+1) cells. For a pair {s, s'} at position i the constant
// parity condition on the octahedron formed by the other positions' pairs is
// exactly "the box holds an even number of vectors", so a system has the
// parity property iff every box is even. Each vector lies in d^(d+1) boxes.
//
// Both search modes branch on an unmet obligation of the current partial
// system V: an odd box (some extension must add one of its free cells) or,
// in full mode, an unused (position, value) pair. Any solution containing V
// meets the obligation, so branching over its candidates is complete.
//   - symmetry-reduced: level-synchronous over |V|, rooted at {(1,...,1)}
//     (the group is transitive on vectors), children deduplicated by
//     canonical form. Level order gives minimality directly.
//   - plain: depth-first with forbidden sets (candidate k excludes
//     candidates 1..k-1 in later branches), iterative deepening on the size.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "cdepth/canonical.hpp"
#include "cdepth/configuration.hpp"
#include "cdepth/parallel.hpp"
#include "cdepth/systems.hpp"

namespace cdepth {

enum class SearchOutcome { no_system, witness, budget_exhausted };

inline std::string to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::no_system: return "no-system";
    case SearchOutcome::witness: return "witness";
    case SearchOutcome::budget_exhausted: return "budget-exhausted";
  }
  return "unknown";
}

struct SearchProgress {
  std::size_t level = 0;          // system size being processed (or size bound in plain mode)
  std::uint64_t nodes = 0;        // nodes visited so far
  std::uint64_t frontier = 0;     // nodes at the current level (symmetric mode)
  double seconds = 0;
};

struct SearchOptions {
  std::size_t d = 2;
  CoreMode mode = CoreMode::full;
  std::size_t max_size = 4;
  unsigned threads = 1;
  bool plain = false;
  std::uint64_t node_budget = 0;  // 0: unlimited
  bool collect_all = false;       // keep every minimum witness (canonical forms)
  std::string checkpoint;         // symmetric mode only; empty: none
  std::function<void(const SearchProgress&)> progress;
};

struct SearchCertificate {
  std::size_t d = 0;
  CoreMode mode = CoreMode::full;
  std::size_t max_size = 0;
  bool plain = false;
  SearchOutcome outcome = SearchOutcome::no_system;
  std::optional<VectorSystem> witness;
  bool witness_verified = false;
  std::vector<VectorSystem> all_witnesses;
  std::uint64_t nodes = 0;
  std::vector<std::uint64_t> level_nodes;  // symmetric: nodes per size; plain: nodes per size bound
  std::string group;
  double seconds = 0;
};

inline std::string group_description(std::size_t d, bool plain) {
  if (plain) return "trivial (no symmetry reduction)";
  const std::size_t n = d + 1;
  std::uint64_t fact = 1;
  for (std::size_t k = 2; k <= n; ++k) fact *= k;
  std::uint64_t order = 1;
  for (std::size_t k = 0; k <= n; ++k) order *= fact;
  return "S" + std::to_string(n) + " on positions x (S" + std::to_string(n) + ")^" + std::to_string(n) +
         " on values, order " + std::to_string(order);
}

/// Flat incidence tables for {0..d}^{d+1}.
class SearchSpace {
 public:
  explicit SearchSpace(std::size_t d) : d_(d), n_(d + 1) {
    if (d == 0 || d > 4) throw Error(ErrorKind::invalid_argument, "search supports 1 <= d <= 4");
    vectors_ = 1;
    for (std::size_t k = 0; k < n_; ++k) vectors_ *= n_;
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a + 1; b < n_; ++b) pairs_.emplace_back(a, b);
    boxes_ = 1;
    boxes_per_vector_ = 1;
    for (std::size_t k = 0; k < n_; ++k) {
      boxes_ *= pairs_.size();
      boxes_per_vector_ *= n_ - 1;
    }
    cells_per_box_ = std::size_t{1} << n_;

    values_.resize(vectors_ * n_);
    for (std::size_t v = 0; v < vectors_; ++v) {
      std::size_t x = v;
      for (std::size_t q = n_; q-- > 0;) {
        values_[v * n_ + q] = static_cast<std::uint8_t>(x % n_);
        x /= n_;
      }
    }
    box_cells_.resize(boxes_ * cells_per_box_);
    for (std::size_t b = 0; b < boxes_; ++b) {
      std::vector<std::size_t> digit(n_);
      std::size_t x = b;
      for (std::size_t q = n_; q-- > 0;) {
        digit[q] = x % pairs_.size();
        x /= pairs_.size();
      }
      for (std::size_t mask = 0; mask < cells_per_box_; ++mask) {
        std::size_t v = 0;
        for (std::size_t q = 0; q < n_; ++q) {
          const auto [lo, hi] = pairs_[digit[q]];
          v = v * n_ + ((mask >> (n_ - 1 - q)) & 1U ? hi : lo);
        }
        box_cells_[b * cells_per_box_ + mask] = static_cast<std::uint32_t>(v);
      }
    }
    vector_boxes_.resize(vectors_ * boxes_per_vector_);
    for (std::size_t v = 0; v < vectors_; ++v) {
      for (std::size_t k = 0; k < boxes_per_vector_; ++k) {
        std::size_t x = k, b = 0;
        std::vector<std::size_t> other(n_);
        for (std::size_t q = n_; q-- > 0;) {
          other[q] = x % (n_ - 1);
          x /= n_ - 1;
        }
        for (std::size_t q = 0; q < n_; ++q) {
          const std::size_t a = values_[v * n_ + q];
          std::size_t c = other[q] >= a ? other[q] + 1 : other[q];
          b = b * pairs_.size() + pair_index(std::min(a, c), std::max(a, c));
        }
        vector_boxes_[v * boxes_per_vector_ + k] = static_cast<std::uint32_t>(b);
      }
    }
  }

  std::size_t dim() const { return d_; }
  std::size_t n() const { return n_; }
  std::size_t vectors() const { return vectors_; }
  std::size_t boxes() const { return boxes_; }
  std::size_t boxes_per_vector() const { return boxes_per_vector_; }
  std::size_t cells_per_box() const { return cells_per_box_; }
  std::uint8_t value(std::size_t v, std::size_t q) const { return values_[v * n_ + q]; }
  const std::uint8_t* row(std::size_t v) const { return values_.data() + v * n_; }
  std::span<const std::uint32_t> boxes_of(std::size_t v) const {
    return {vector_boxes_.data() + v * boxes_per_vector_, boxes_per_vector_};
  }
  std::span<const std::uint32_t> cells_of(std::size_t b) const {
    return {box_cells_.data() + b * cells_per_box_, cells_per_box_};
  }
  std::size_t encode(std::span<const std::uint8_t> row) const {
    std::size_t v = 0;
    for (std::size_t q = 0; q < n_; ++q) v = v * n_ + row[q];
    return v;
  }
  IndexVector to_index_vector(std::size_t v) const {
    IndexVector out{std::vector<int>(n_)};
    for (std::size_t q = 0; q < n_; ++q) out[q] = value(v, q);
    return out;
  }

 private:
  std::size_t pair_index(std::size_t a, std::size_t b) const {
    return static_cast<std::size_t>(std::find(pairs_.begin(), pairs_.end(), std::pair{a, b}) - pairs_.begin());
  }

  std::size_t d_, n_;
  std::size_t vectors_ = 0, boxes_ = 0, boxes_per_vector_ = 0, cells_per_box_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<std::uint8_t> values_;
  std::vector<std::uint32_t> box_cells_;
  std::vector<std::uint32_t> vector_boxes_;
};

namespace detail {

/// Mutable partial system with incremental box counts, odd-box set and
/// (position, value) usage.
class PartialSystem {
 public:
  PartialSystem(const SearchSpace& space, CoreMode mode)
      : space_(&space),
        mode_(mode),
        box_count_(space.boxes(), 0),
        box_forbidden_(space.boxes(), 0),
        odd_pos_(space.boxes(), kNone),
        in_set_(space.vectors(), 0),
        forbidden_(space.vectors(), 0),
        usage_(space.n() * space.n(), 0),
        unused_per_position_(space.n(), space.n()) {}

  std::size_t size() const { return chosen_.size(); }
  const std::vector<std::uint32_t>& chosen() const { return chosen_; }
  bool contains(std::size_t v) const { return in_set_[v] != 0; }
  bool forbidden(std::size_t v) const { return forbidden_[v] != 0; }

  void add(std::size_t v) {
    chosen_.push_back(static_cast<std::uint32_t>(v));
    in_set_[v] = 1;
    for (std::uint32_t b : space_->boxes_of(v)) {
      if (++box_count_[b] & 1U) insert_odd(b);
      else erase_odd(b);
    }
    for (std::size_t q = 0; q < space_->n(); ++q)
      if (usage_[q * space_->n() + space_->value(v, q)]++ == 0) --unused_per_position_[q];
  }

  void remove_last() {
    const std::size_t v = chosen_.back();
    chosen_.pop_back();
    in_set_[v] = 0;
    for (std::uint32_t b : space_->boxes_of(v)) {
      if (--box_count_[b] & 1U) insert_odd(b);
      else erase_odd(b);
    }
    for (std::size_t q = 0; q < space_->n(); ++q)
      if (--usage_[q * space_->n() + space_->value(v, q)] == 0) ++unused_per_position_[q];
  }

  void forbid(std::size_t v) {
    forbidden_[v] = 1;
    for (std::uint32_t b : space_->boxes_of(v)) ++box_forbidden_[b];
  }
  void allow(std::size_t v) {
    forbidden_[v] = 0;
    for (std::uint32_t b : space_->boxes_of(v)) --box_forbidden_[b];
  }

  bool solved() const {
    if (!odd_.empty() || chosen_.empty()) return false;
    if (mode_ == CoreMode::full)
      for (std::size_t u : unused_per_position_)
        if (u) return false;
    return true;
  }

  /// Lower bound on the number of vectors any solution extending this one
  /// still has to add.
  std::size_t still_needed() const {
    std::size_t need = (odd_.size() + space_->boxes_per_vector() - 1) / space_->boxes_per_vector();
    if (mode_ == CoreMode::full)
      for (std::size_t u : unused_per_position_) need = std::max(need, u);
    if (chosen_.empty()) need = std::max<std::size_t>(need, 1);
    return need;
  }

  /// Candidates of the obligation with the fewest admissible cells: vectors
  /// not in the system and not forbidden, in increasing index order.
  void obligation(std::vector<std::uint32_t>& out) const {
    out.clear();
    if (!odd_.empty()) {
      std::size_t best = kNone, best_free = kNone;
      for (std::uint32_t b : odd_) {
        const std::size_t free = space_->cells_per_box() - box_count_[b] - box_forbidden_[b];
        if (free < best_free || (free == best_free && b < best)) {
          best = b;
          best_free = free;
        }
      }
      for (std::uint32_t c : space_->cells_of(best))
        if (!in_set_[c] && !forbidden_[c]) out.push_back(c);
      std::sort(out.begin(), out.end());
      return;
    }
    const std::size_t n = space_->n();
    if (mode_ == CoreMode::full) {
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t s = 0; s < n; ++s)
          if (usage_[q * n + s] == 0) {
            for (std::size_t v = 0; v < space_->vectors(); ++v)
              if (space_->value(v, q) == s && !in_set_[v] && !forbidden_[v]) out.push_back(static_cast<std::uint32_t>(v));
            return;
          }
    }
    if (chosen_.empty())
      for (std::size_t v = 0; v < space_->vectors(); ++v)
        if (!forbidden_[v]) out.push_back(static_cast<std::uint32_t>(v));
  }

 private:
  static constexpr std::size_t kNone = ~std::size_t{0};

  void insert_odd(std::uint32_t b) {
    odd_pos_[b] = odd_.size();
    odd_.push_back(b);
  }
  void erase_odd(std::uint32_t b) {
    const std::size_t pos = odd_pos_[b];
    odd_[pos] = odd_.back();
    odd_pos_[odd_[pos]] = pos;
    odd_.pop_back();
    odd_pos_[b] = kNone;
  }

  const SearchSpace* space_;
  CoreMode mode_;
  std::vector<std::uint8_t> box_count_;
  std::vector<std::uint8_t> box_forbidden_;
  std::vector<std::uint32_t> odd_;
  std::vector<std::size_t> odd_pos_;
  std::vector<std::uint8_t> in_set_;
  std::vector<std::uint8_t> forbidden_;
  std::vector<std::uint32_t> chosen_;
  std::vector<std::uint16_t> usage_;
  std::vector<std::size_t> unused_per_position_;
};

/// Sorted vector ids of the canonical form of a set of vector ids.
inline std::vector<std::uint32_t> canonical_key(const SearchSpace& space, std::span<const std::uint32_t> ids) {
  const std::size_t n = space.n();
  std::vector<std::uint8_t> rows;
  rows.reserve(ids.size() * n);
  for (std::uint32_t v : ids) rows.insert(rows.end(), space.row(v), space.row(v) + n);
  const auto canon = canonical_rows(rows, ids.size(), n);
  std::vector<std::uint32_t> key;
  key.reserve(ids.size());
  for (std::size_t r = 0; r < ids.size(); ++r)
    key.push_back(static_cast<std::uint32_t>(space.encode({canon.data() + r * n, n})));
  std::sort(key.begin(), key.end());
  return key;
}

inline VectorSystem system_of(const SearchSpace& space, std::span<const std::uint32_t> ids) {
  std::vector<IndexVector> out;
  for (std::uint32_t v : ids) out.push_back(space.to_index_vector(v));
  return VectorSystem(space.dim(), std::move(out));
}

inline double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Checkpoint {
  std::size_t level = 0;
  std::uint64_t nodes = 0;
  std::vector<std::uint64_t> level_nodes;
  std::vector<std::uint32_t> frontier;
};

inline nlohmann::json checkpoint_header(const SearchOptions& o) {
  return {{"format", "cdepth-search-checkpoint/1"},
          {"d", o.d},
          {"mode", to_string(o.mode)},
          {"max_size", o.max_size}};
}

inline void write_checkpoint(const SearchOptions& o, const Checkpoint& c) {
  nlohmann::json doc = checkpoint_header(o);
  doc["level"] = c.level;
  doc["nodes"] = c.nodes;
  doc["level_nodes"] = c.level_nodes;
  doc["frontier"] = c.frontier;
  const std::string tmp = o.checkpoint + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << doc.dump() << "\n";
    if (!out) throw Error(ErrorKind::invalid_argument, "cannot write checkpoint " + tmp);
  }
  std::filesystem::rename(tmp, o.checkpoint);
}

inline std::optional<Checkpoint> read_checkpoint(const SearchOptions& o) {
  if (o.checkpoint.empty() || !std::filesystem::exists(o.checkpoint)) return std::nullopt;
  std::ifstream in(o.checkpoint);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, "checkpoint " + o.checkpoint + ": " + e.what());
  }
  const auto header = checkpoint_header(o);
  for (const auto& [k, v] : header.items())
    if (!doc.contains(k) || doc[k] != v)
      throw Error(ErrorKind::invalid_argument, "checkpoint " + o.checkpoint + " was written for other search settings");
  Checkpoint c;
  c.level = doc["level"].get<std::size_t>();
  c.nodes = doc["nodes"].get<std::uint64_t>();
  c.level_nodes = doc["level_nodes"].get<std::vector<std::uint64_t>>();
  c.frontier = doc["frontier"].get<std::vector<std::uint32_t>>();
  return c;
}

inline void symmetric_search(const SearchSpace& space, const SearchOptions& o, SearchCertificate& cert) {
  const auto start = std::chrono::steady_clock::now();
  Checkpoint state;
  if (auto resumed = read_checkpoint(o)) {
    state = std::move(*resumed);
  } else {
    state.level = 1;
    state.frontier = {0};  // {(1,...,1)}: every nonempty system has an image containing it
  }

  while (true) {
    const std::size_t m = state.level;
    const std::size_t count = state.frontier.size() / m;
    state.nodes += count;
    state.level_nodes.push_back(count);
    if (o.progress) o.progress({m, state.nodes, count, seconds_since(start)});
    if (o.node_budget && state.nodes > o.node_budget) {
      cert.outcome = SearchOutcome::budget_exhausted;
      break;
    }

    // Solutions at this level are minimum-size witnesses.
    std::vector<std::vector<std::uint32_t>> solutions;
    {
      PartialSystem ps(space, o.mode);
      for (std::size_t i = 0; i < count; ++i) {
        std::span<const std::uint32_t> ids(state.frontier.data() + i * m, m);
        for (std::uint32_t v : ids) ps.add(v);
        if (ps.solved()) solutions.emplace_back(ids.begin(), ids.end());
        for (std::size_t k = 0; k < m; ++k) ps.remove_last();
        if (!solutions.empty() && !o.collect_all) break;
      }
    }
    if (!solutions.empty()) {
      cert.outcome = SearchOutcome::witness;
      cert.witness = system_of(space, solutions.front());
      if (o.collect_all)
        for (const auto& s : solutions) cert.all_witnesses.push_back(system_of(space, s));
      break;
    }
    if (m >= o.max_size || count == 0) {
      cert.outcome = SearchOutcome::no_system;
      break;
    }

    const unsigned parts = std::max(1U, o.threads);
    std::vector<std::vector<std::uint32_t>> produced(parts);
    std::atomic<std::size_t> next_part{0};
    parallel_ranges(count, parts, [&](std::size_t begin, std::size_t end) {
      std::vector<std::uint32_t>& out = produced[next_part++];
      PartialSystem ps(space, o.mode);
      std::vector<std::uint32_t> cand;
      for (std::size_t i = begin; i < end; ++i) {
        std::span<const std::uint32_t> ids(state.frontier.data() + i * m, m);
        for (std::uint32_t v : ids) ps.add(v);
        if (m + ps.still_needed() <= o.max_size) {
          ps.obligation(cand);
          for (std::uint32_t c : cand) {
            ps.add(c);
            if (ps.solved() || m + 1 + ps.still_needed() <= o.max_size) {
              const auto key = canonical_key(space, ps.chosen());
              out.insert(out.end(), key.begin(), key.end());
            }
            ps.remove_last();
          }
        }
        for (std::size_t k = 0; k < m; ++k) ps.remove_last();
      }
    });
    // Merge, then sort and deduplicate whole keys; order of parts is irrelevant.
    const std::size_t width = m + 1;
    std::vector<std::vector<std::uint32_t>> keys;
    for (const auto& part : produced)
      for (std::size_t i = 0; i < part.size(); i += width) keys.emplace_back(part.begin() + static_cast<std::ptrdiff_t>(i), part.begin() + static_cast<std::ptrdiff_t>(i + width));
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    state.frontier.clear();
    for (const auto& k : keys) state.frontier.insert(state.frontier.end(), k.begin(), k.end());
    state.level = width;
    if (!o.checkpoint.empty()) write_checkpoint(o, state);
  }
  cert.nodes = state.nodes;
  cert.level_nodes = state.level_nodes;
}

struct BranchResult {
  std::uint64_t nodes = 0;
  bool aborted = false;
  std::vector<std::vector<std::uint32_t>> solutions;
};

/// Depth-first search below the current partial system, at most `bound`
/// vectors in total. Stops at the first solution unless `collect_all`.
class PlainDfs {
 public:
  PlainDfs(const SearchSpace& space, const SearchOptions& o, std::size_t bound, const std::atomic<bool>& stop)
      : space_(space), o_(o), bound_(bound), stop_(stop) {}

  /// Returns false when aborted (budget, or another branch already decided).
  bool run(PartialSystem& ps, BranchResult& result) {
    if (stop_.load(std::memory_order_relaxed)) {
      result.aborted = true;
      return false;
    }
    ++result.nodes;
    if (o_.node_budget && result.nodes > o_.node_budget) {
      result.aborted = true;
      return false;
    }
    if (ps.solved()) {
      result.solutions.push_back(ps.chosen());
      return true;
    }
    if (ps.size() + ps.still_needed() > bound_) return true;
    std::vector<std::uint32_t> cand;
    ps.obligation(cand);
    std::size_t forbidden = 0;
    bool ok = true;
    for (std::uint32_t c : cand) {
      ps.add(c);
      ok = run(ps, result);
      ps.remove_last();
      if (!ok || (!result.solutions.empty() && !o_.collect_all)) break;
      ps.forbid(c);
      ++forbidden;
    }
    for (std::size_t k = 0; k < forbidden; ++k) ps.allow(cand[k]);
    return ok;
  }

 private:
  const SearchSpace& space_;
  const SearchOptions& o_;
  std::size_t bound_;
  const std::atomic<bool>& stop_;
};

inline void plain_search(const SearchSpace& space, const SearchOptions& o, SearchCertificate& cert) {
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t bound = 1; bound <= o.max_size; ++bound) {
    // Root obligation, split into branches: branch b adds root candidate b and
    // forbids candidates 0..b-1.
    std::vector<std::uint32_t> roots;
    {
      PartialSystem ps(space, o.mode);
      ps.obligation(roots);
    }
    std::vector<BranchResult> results(roots.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_found{roots.size()};
    std::atomic<bool> budget_hit{false};
    const unsigned workers = std::max(1U, o.threads);
    auto worker = [&] {
      PartialSystem ps(space, o.mode);
      while (true) {
        const std::size_t b = next++;
        if (b >= roots.size()) return;
        if (!o.collect_all && b > first_found.load()) continue;
        for (std::size_t k = 0; k < b; ++k) ps.forbid(roots[k]);
        ps.add(roots[b]);
        std::atomic<bool> stop{false};
        PlainDfs dfs(space, o, bound, o.collect_all ? stop : budget_hit);
        const bool ok = dfs.run(ps, results[b]);
        ps.remove_last();
        for (std::size_t k = 0; k < b; ++k) ps.allow(roots[k]);
        if (!ok && !budget_hit) budget_hit = true;
        if (!results[b].solutions.empty()) {
          std::size_t cur = first_found.load();
          while (b < cur && !first_found.compare_exchange_weak(cur, b)) {
          }
        }
      }
    };
    if (workers == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }

    // Deterministic aggregation: branches before the first witness branch are
    // complete; later branches do not count.
    const std::size_t last = o.collect_all ? roots.size() : std::min(roots.size(), first_found.load() + 1);
    std::uint64_t nodes = 1;  // the root
    bool aborted = false;
    for (std::size_t b = 0; b < last; ++b) {
      nodes += results[b].nodes;
      aborted = aborted || results[b].aborted;
    }
    cert.nodes += nodes;
    cert.level_nodes.push_back(nodes);
    if (o.progress) o.progress({bound, cert.nodes, 0, seconds_since(start)});
    if (aborted || (o.node_budget && cert.nodes > o.node_budget)) {
      cert.outcome = SearchOutcome::budget_exhausted;
      return;
    }
    std::vector<std::vector<std::uint32_t>> solutions;
    for (std::size_t b = 0; b < last; ++b)
      solutions.insert(solutions.end(), results[b].solutions.begin(), results[b].solutions.end());
    if (!solutions.empty()) {
      cert.outcome = SearchOutcome::witness;
      auto first = solutions.front();
      std::sort(first.begin(), first.end());
      cert.witness = system_of(space, first);
      if (o.collect_all) {
        std::vector<std::vector<std::uint32_t>> keys;
        for (const auto& s : solutions) keys.push_back(canonical_key(space, s));
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        for (const auto& k : keys) cert.all_witnesses.push_back(system_of(space, k));
      }
      return;
    }
  }
  cert.outcome = SearchOutcome::no_system;
}

}  // namespace detail

/// Smallest system of size <= max_size with the parity property and, in full
/// mode, the covering property; or a certificate that none exists.
inline SearchCertificate search_min_system(const SearchOptions& o) {
  if (o.max_size == 0) throw Error(ErrorKind::invalid_argument, "max size must be positive");
  if (o.plain && !o.checkpoint.empty())
    throw Error(ErrorKind::invalid_argument, "checkpoints are only supported by the symmetry-reduced search");
  const SearchSpace space(o.d);
  SearchCertificate cert;
  cert.d = o.d;
  cert.mode = o.mode;
  cert.max_size = o.max_size;
  cert.plain = o.plain;
  cert.group = group_description(o.d, o.plain);
  const auto start = std::chrono::steady_clock::now();
  if (o.plain) detail::plain_search(space, o, cert);
  else detail::symmetric_search(space, o, cert);
  cert.seconds = detail::seconds_since(start);
  if (cert.witness) {
    const bool parity = static_cast<bool>(check_property2(*cert.witness));
    const bool cover = o.mode == CoreMode::diamond ? !cert.witness->empty()
                                                     : static_cast<bool>(check_property1(*cert.witness));
    cert.witness_verified = parity && cover;
  }
  return cert;
}

}  // namespace cdepth
