#pragma once

// Backtracking tour search over a precomputed move table: open, closed and
// magic modes, Warnsdorff ordering, dead-end pruning and line-sum pruning.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "ndkt/error.hpp"
#include "ndkt/feasibility.hpp"
#include "ndkt/lattice.hpp"
#include "ndkt/magic.hpp"
#include "ndkt/tour.hpp"

namespace ndkt {

enum class Mode { open, closed, magic };
enum class Heuristic { warnsdorff, lexicographic };
enum class Status { found, exhausted_no_solution, budget_exceeded };

inline const char* to_string(Mode m) {
  switch (m) {
    case Mode::open: return "open";
    case Mode::closed: return "closed";
    case Mode::magic: return "magic";
  }
  return "?";
}

inline const char* to_string(Status s) {
  switch (s) {
    case Status::found: return "found";
    case Status::exhausted_no_solution: return "exhausted_no_solution";
    case Status::budget_exceeded: return "budget_exceeded";
  }
  return "?";
}

struct Budget {
  std::optional<std::chrono::nanoseconds> wall;
  std::optional<std::uint64_t> nodes;

  bool unlimited() const { return !wall && !nodes; }
};

struct Progress {
  std::uint64_t nodes = 0;
  double nodes_per_second = 0;
  std::chrono::nanoseconds elapsed{};
  std::vector<std::uint64_t> depth_histogram;  // nodes expanded at each path length
};

struct SearchConfig {
  Mode mode = Mode::open;
  Heuristic heuristic = Heuristic::warnsdorff;
  Budget budget;
  std::uint64_t seed = 0;  // 0 keeps ties in flat-index order
  std::vector<Index> prefix;
  bool quartile_pruning = false;
  bool exhaustive = false;
  unsigned jobs = 1;
  std::function<void(const Progress&)> on_progress;  // roughly once a second, from one worker
};

struct SearchOutcome {
  Status status = Status::exhausted_no_solution;
  std::optional<Tour> tour;
  std::uint64_t nodes_expanded = 0;
  std::chrono::nanoseconds elapsed{};
};

inline std::string to_key_values(const SearchOutcome& o) {
  std::string out = std::string("status=") + to_string(o.status) + " nodes=" + std::to_string(o.nodes_expanded);
  if (o.tour) out += std::string(" closure=") + to_string(validate(*o.tour).closure);
  return out;
}

// Thrown when a proven theorem rules the request out before any search.
class InfeasibleError : public DomainError {
 public:
  explicit InfeasibleError(FeasibilityVerdict verdict)
      : DomainError("infeasible: " + verdict.citation), verdict_(std::move(verdict)) {}
  const FeasibilityVerdict& verdict() const noexcept { return verdict_; }

 private:
  FeasibilityVerdict verdict_;
};

inline constexpr std::chrono::seconds default_magic_budget{60};

// Line-sum bookkeeping for searches that number cells 1..N in visit order.
//
// Rules checked after every placement, each sound for any magic tour that
// extends the current numbering:
//  (a) a full line sums to the magic constant;
//  (b) a partial line's deficit lies between the least and greatest sums its
//      empty cells can still receive, and has the right parity (a cell's
//      number parity is fixed by its colour once cell 1 is placed);
//  (c) with quartile balancing, no line holds two numbers of one quarter and
//      no line still misses a quarter whose numbers are all used up.
// A line with one empty cell forces that cell's number; the forced step must
// be reachable in time (knight distance) and consistent across lines.
class MagicConstraints {
 public:
  enum class Rule { none, full_line, bounds, parity, quartile, forced_distance, forced_conflict };

  struct Check {
    Rule violated = Rule::none;
    std::size_t line = 0;
    std::optional<Index> forced_next;  // cell that must carry the next number

    explicit operator bool() const { return violated == Rule::none; }
  };

  MagicConstraints(const MoveTable& table, bool quartiles) : table_(table), quartiles_(quartiles) {
    const Shape& shape = table.shape();
    order_ = shape.order();
    if (quartiles_ && order_ != 4) throw DomainError("quartile pruning needs an order-4 hypercube");
    n_ = static_cast<std::uint32_t>(shape.cell_count());
    constant_ = magic_constant(order_, static_cast<int>(shape.dimension()));
    const auto lines = enumerate_lines(shape);
    line_count_ = lines.size();
    cell_lines_.assign(static_cast<std::size_t>(n_) * shape.dimension(), 0);
    std::vector<std::size_t> fill(n_, 0);
    for (std::size_t l = 0; l < lines.size(); ++l)
      for (Index c : lines[l].cells) cell_lines_[c * shape.dimension() + fill[c]++] = static_cast<std::uint32_t>(l);
    dims_ = shape.dimension();
    line_sum_.assign(line_count_, 0);
    line_filled_.assign(line_count_, 0);
    line_odd_empty_.assign(line_count_, 0);
    line_empty_xor_.assign(line_count_, 0);
    line_groups_.assign(line_count_ * 4, 0);
    for (std::size_t l = 0; l < lines.size(); ++l)
      for (Index c : lines[l].cells) line_empty_xor_[l] ^= c;
    color_.resize(n_);
    for (Index c = 0; c < n_; ++c) color_[c] = cell_color(shape, c);
    forced_stamp_.assign(n_, 0);
    forced_value_.assign(n_, 0);
    owner_stamp_.assign(n_ + 1, 0);
    if (n_ <= distance_table_limit) build_distances();
  }

  Sum constant() const noexcept { return constant_; }

  void place(Index cell, std::uint32_t number) {
    if (number == 1) set_start_color(color_[cell]);
    for (std::size_t k = 0; k < dims_; ++k) {
      const std::uint32_t l = cell_lines_[cell * dims_ + k];
      line_sum_[l] += number;
      ++line_filled_[l];
      line_empty_xor_[l] ^= cell;
      if (odd_cell(cell)) --line_odd_empty_[l];
      if (quartiles_ && ++line_groups_[l * 4 + group(number)] == 2) ++duplicate_groups_;
    }
  }

  void unplace(Index cell, std::uint32_t number) {
    for (std::size_t k = 0; k < dims_; ++k) {
      const std::uint32_t l = cell_lines_[cell * dims_ + k];
      line_sum_[l] -= number;
      --line_filled_[l];
      line_empty_xor_[l] ^= cell;
      if (odd_cell(cell)) ++line_odd_empty_[l];
      if (quartiles_ && line_groups_[l * 4 + group(number)]-- == 2) --duplicate_groups_;
    }
  }

  // `head` carries number `last`, the highest placed so far.
  Check check(Index head, std::uint32_t last) {
    Check result;
    if (quartiles_ && duplicate_groups_ > 0) {
      result.violated = Rule::quartile;
      return result;
    }
    ++epoch_;
    const std::int64_t remaining = static_cast<std::int64_t>(n_) - last;
    // counts of odd and even numbers in (last, n]
    const std::int64_t odd_avail = (static_cast<std::int64_t>(n_) + 1) / 2 - (static_cast<std::int64_t>(last) + 1) / 2;
    const std::int64_t even_avail = remaining - odd_avail;
    for (std::size_t l = 0; l < line_count_; ++l) {
      const std::int64_t empty = order_ - line_filled_[l];
      const Sum deficit = constant_ - line_sum_[l];
      if (empty == 0) {
        if (deficit != 0) return fail(result, Rule::full_line, l);
        continue;
      }
      const std::int64_t odd = line_odd_empty_[l];
      const std::int64_t even = empty - odd;
      if (((deficit - odd) & 1) != 0) return fail(result, Rule::parity, l);
      if (odd > odd_avail || even > even_avail) return fail(result, Rule::bounds, l);
      const Sum lo = smallest(odd, first_above(last, 1)) + smallest(even, first_above(last, 0));
      const Sum hi = largest(odd, last_at_most(n_, 1)) + largest(even, last_at_most(n_, 0));
      if (deficit < lo || deficit > hi) return fail(result, Rule::bounds, l);
      if (quartiles_) {
        for (int g = 0; g < 4; ++g) {
          const std::uint32_t top = static_cast<std::uint32_t>(g + 1) * (n_ / 4);
          if (line_groups_[l * 4 + static_cast<std::size_t>(g)] == 0 && top <= last)
            return fail(result, Rule::quartile, l);
        }
      }
      if (empty == 1) {
        const Index cell = line_empty_xor_[l];
        const auto value = static_cast<std::uint32_t>(deficit);
        if (!distances_.empty() && static_cast<std::int64_t>(value - last) < distance(head, cell))
          return fail(result, Rule::forced_distance, l);
        if (forced_stamp_[cell] == epoch_) {
          if (forced_value_[cell] != value) return fail(result, Rule::forced_conflict, l);
        } else {
          if (owner_stamp_[value] == epoch_) return fail(result, Rule::forced_conflict, l);
          forced_stamp_[cell] = epoch_;
          forced_value_[cell] = value;
          owner_stamp_[value] = epoch_;
        }
        if (value == last + 1) {
          if (result.forced_next && *result.forced_next != cell) return fail(result, Rule::forced_conflict, l);
          result.forced_next = cell;
        }
      }
    }
    return result;
  }

 private:
  static constexpr std::uint32_t distance_table_limit = 4096;

  static Check fail(Check& c, Rule r, std::size_t line) {
    c.violated = r;
    c.line = line;
    c.forced_next.reset();
    return c;
  }

  int group(std::uint32_t number) const { return quartile_group(number, n_); }

  void set_start_color(Color c) {
    start_color_ = c;
    std::fill(line_odd_empty_.begin(), line_odd_empty_.end(), 0);
    for (Index cell = 0; cell < n_; ++cell) {
      if (!odd_cell(cell)) continue;
      for (std::size_t k = 0; k < dims_; ++k) ++line_odd_empty_[cell_lines_[cell * dims_ + k]];
    }
  }

  // Cells sharing the colour of cell 1 carry the odd numbers.
  bool odd_cell(Index cell) const { return color_[cell] == start_color_; }

  // First number above `last` with the given parity (1 = odd).
  static std::int64_t first_above(std::uint32_t last, int parity) {
    std::int64_t v = static_cast<std::int64_t>(last) + 1;
    return (v & 1) == parity ? v : v + 1;
  }
  static std::int64_t last_at_most(std::uint32_t n, int parity) {
    std::int64_t v = n;
    return (v & 1) == parity ? v : v - 1;
  }
  // Sum of k numbers stepping by 2 upward from `from`, or downward from `from`.
  static Sum smallest(std::int64_t k, std::int64_t from) { return k * from + k * (k - 1); }
  static Sum largest(std::int64_t k, std::int64_t from) { return k * from - k * (k - 1); }

  std::int64_t distance(Index a, Index b) const { return distances_[static_cast<std::size_t>(a) * n_ + b]; }

  void build_distances() {
    constexpr std::uint8_t unreachable = std::numeric_limits<std::uint8_t>::max();
    distances_.assign(static_cast<std::size_t>(n_) * n_, unreachable);
    std::vector<Index> queue;
    for (Index s = 0; s < n_; ++s) {
      std::uint8_t* row = distances_.data() + static_cast<std::size_t>(s) * n_;
      queue.assign(1, s);
      row[s] = 0;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const Index u = queue[head];
        for (Index v : table_.neighbors(u)) {
          if (row[v] != unreachable) continue;
          row[v] = static_cast<std::uint8_t>(std::min<int>(row[u] + 1, unreachable - 1));
          queue.push_back(v);
        }
      }
    }
  }

  const MoveTable& table_;
  bool quartiles_;
  int order_ = 0;
  std::uint32_t n_ = 0;
  Sum constant_ = 0;
  std::size_t dims_ = 0;
  std::size_t line_count_ = 0;
  std::vector<std::uint32_t> cell_lines_;
  std::vector<Sum> line_sum_;
  std::vector<int> line_filled_;
  std::vector<int> line_odd_empty_;
  std::vector<Index> line_empty_xor_;
  std::vector<std::uint16_t> line_groups_;
  std::size_t duplicate_groups_ = 0;
  std::vector<Color> color_;
  Color start_color_ = Color::light;
  std::vector<std::uint8_t> distances_;
  std::uint64_t epoch_ = 0;
  std::vector<std::uint64_t> forced_stamp_;
  std::vector<std::uint32_t> forced_value_;
  std::vector<std::uint64_t> owner_stamp_;
};

// Result of stepping a complete tour through MagicConstraints.
struct ReplayResult {
  std::size_t prunes = 0;
  std::size_t forced_mismatches = 0;  // a forced next cell that the tour did not take
  std::optional<std::size_t> first_prune_step;
};

inline ReplayResult replay_through_pruner(const Tour& tour, bool quartiles) {
  const MoveTable table = build_move_table(tour.shape());
  MagicConstraints constraints(table, quartiles);
  ReplayResult out;
  for (std::size_t k = 0; k < tour.size(); ++k) {
    constraints.place(tour[k], static_cast<std::uint32_t>(k + 1));
    const auto check = constraints.check(tour[k], static_cast<std::uint32_t>(k + 1));
    if (!check) {
      ++out.prunes;
      if (!out.first_prune_step) out.first_prune_step = k + 1;
    } else if (check.forced_next && k + 1 < tour.size() && *check.forced_next != tour[k + 1]) {
      ++out.forced_mismatches;
    }
  }
  return out;
}

namespace detail {

// Fixed-size visited bitmask keyed by flat index.
class VisitedSet {
 public:
  explicit VisitedSet(std::size_t n) : words_((n + 63) / 64, 0) {}
  bool test(Index i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(Index i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(Index i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

 private:
  std::vector<std::uint64_t> words_;
};

using Clock = std::chrono::steady_clock;

struct SharedControl {
  Budget budget;
  Clock::time_point started = Clock::now();
  std::atomic<bool> stop{false};
  std::atomic<bool> budget_hit{false};
  std::atomic<std::uint64_t> nodes{0};
  std::function<void(const Progress&)> on_progress;
};

class PathEngine {
 public:
  enum class Result { found, exhausted, stopped };

  PathEngine(const MoveTable& table, Mode mode, const SearchConfig& config, SharedControl& control,
             bool count_all, bool reporter)
      : table_(table),
        n_(table.size()),
        mode_(mode),
        heuristic_(config.heuristic),
        control_(control),
        count_all_(count_all),
        reporter_(reporter),
        visited_(n_),
        free_degree_(n_),
        mark_(n_, 0),
        rng_(config.seed),
        seeded_(config.seed != 0) {
    for (Index i = 0; i < n_; ++i) {
      free_degree_[i] = table.degree(i);
      max_degree_ = std::max(max_degree_, table.degree(i));
    }
    if (mode == Mode::magic) magic_.emplace(table, config.quartile_pruning);
    candidates_.assign(static_cast<std::size_t>(n_ + 1) * std::max(max_degree_, 1u), 0);
    cand_count_.assign(n_ + 1, 0);
    cand_pos_.assign(n_ + 1, 0);
    forced_.assign(n_ + 1, std::nullopt);
    if (control.on_progress && reporter_) histogram_.assign(n_ + 1, 0);
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  std::uint64_t solutions() const noexcept { return solutions_; }
  const std::vector<Index>& path() const noexcept { return path_; }

  // Pushes cells as a fixed prefix. False when the prefix already fails a prune.
  bool seed(std::span<const Index> cells) {
    for (Index c : cells) push(c);
    if (path_.empty()) return true;
    return consistent(path_.size() >= 2 ? std::optional<Index>(path_[path_.size() - 2]) : std::nullopt);
  }

  void clear() {
    while (!path_.empty()) pop();
  }

  // Candidate order at the current head, as DFS would try them.
  std::vector<Index> ordered_moves() {
    generate(path_.size());
    const std::size_t depth = path_.size();
    auto begin = candidates_.begin() + static_cast<std::ptrdiff_t>(depth * stride());
    return {begin, begin + cand_count_[depth]};
  }

  // Depth-first search of the subtree under the current path.
  Result run() {
    const std::size_t base = path_.size();
    if (base == n_) return complete() ? on_solution(base) : Result::exhausted;
    generate(base);
    while (true) {
      const std::size_t depth = path_.size();
      if (cand_pos_[depth] == cand_count_[depth]) {
        if (depth == base) return Result::exhausted;
        pop();
        continue;
      }
      const Index next = candidates_[depth * stride() + cand_pos_[depth]++];
      const Index head = path_.back();
      push(next);
      if (++nodes_ % 1024 == 0 && !tick()) return Result::stopped;
      if (histogram_.size()) ++histogram_[path_.size()];
      if (!consistent(head)) {
        pop();
        continue;
      }
      if (path_.size() == n_) {
        if (complete()) {
          if (on_solution(base) == Result::found) return Result::found;
        }
        pop();
        continue;
      }
      generate(path_.size());
    }
  }

  void flush_nodes() {
    control_.nodes.fetch_add(nodes_ - flushed_, std::memory_order_relaxed);
    flushed_ = nodes_;
  }

 private:
  std::size_t stride() const { return std::max(max_degree_, 1u); }

  Result on_solution(std::size_t) {
    if (!count_all_) return Result::found;
    ++solutions_;
    return Result::exhausted;
  }

  bool complete() const {
    if (mode_ == Mode::closed) return n_ >= 3 && table_.adjacent(path_.front(), path_.back());
    return true;
  }

  void push(Index c) {
    visited_.set(c);
    path_.push_back(c);
    for (Index v : table_.neighbors(c)) --free_degree_[v];
    if (magic_) magic_->place(c, static_cast<std::uint32_t>(path_.size()));
  }

  void pop() {
    const Index c = path_.back();
    if (magic_) magic_->unplace(c, static_cast<std::uint32_t>(path_.size()));
    for (Index v : table_.neighbors(c)) ++free_degree_[v];
    path_.pop_back();
    visited_.reset(c);
  }

  // Dead-end rules after the head moved from `previous` to path_.back().
  // Every unvisited cell needs links to the rest of the tour: two if it lies
  // inside the path, one if it can be the final cell. Only cells whose link
  // count just dropped are examined.
  bool consistent(std::optional<Index> previous) {
    const Index head = path_.back();
    const std::size_t remaining = n_ - path_.size();
    const Index start = path_.front();
    if (remaining > 0) {
      ++epoch_;
      for (Index v : table_.neighbors(head)) {
        mark_[v] = epoch_;
        // Only the head reaches v, so v must come next and be the last cell.
        if (!visited_.test(v) && free_degree_[v] == 0 && remaining > 1) return false;
      }
      // The last cell must still be able to close back onto the start.
      if (mode_ == Mode::closed && free_degree_[start] == 0) return false;
      if (previous) {
        int endpoints = 0;
        for (Index v : table_.neighbors(*previous)) {
          if (visited_.test(v)) continue;
          int links = static_cast<int>(free_degree_[v]) + (mark_[v] == epoch_ ? 1 : 0);
          if (mode_ == Mode::closed) {
            if (table_.adjacent(v, start)) ++links;
            if (links < 2) return false;
          } else {
            if (links == 0) return false;
            if (links == 1 && ++endpoints > 1) return false;
          }
        }
      }
    }
    if (magic_) {
      auto check = magic_->check(head, static_cast<std::uint32_t>(path_.size()));
      if (!check) return false;
      forced_[path_.size()] = check.forced_next;
    }
    return true;
  }

  void generate(std::size_t depth) {
    Index* out = candidates_.data() + depth * stride();
    std::size_t count = 0;
    const Index head = path_.back();
    const bool has_forced = magic_ && forced_[depth].has_value();
    const Index forced = has_forced ? *forced_[depth] : 0;
    for (Index v : table_.neighbors(head)) {
      if (visited_.test(v)) continue;
      if (has_forced && v != forced) continue;
      out[count++] = v;
    }
    if (heuristic_ == Heuristic::warnsdorff && count > 1) {
      if (seeded_) std::shuffle(out, out + count, rng_);
      std::stable_sort(out, out + count, [&](Index a, Index b) { return free_degree_[a] < free_degree_[b]; });
    }
    cand_count_[depth] = count;
    cand_pos_[depth] = 0;
  }

  // Budget and progress bookkeeping; false means stop.
  bool tick() {
    flush_nodes();
    if (control_.stop.load(std::memory_order_relaxed)) return false;
    const Budget& b = control_.budget;
    const auto now = Clock::now();
    if ((b.nodes && control_.nodes.load(std::memory_order_relaxed) >= *b.nodes) ||
        (b.wall && now - control_.started >= *b.wall)) {
      control_.budget_hit = true;
      control_.stop = true;
      return false;
    }
    if (reporter_ && control_.on_progress && now - last_report_ >= std::chrono::seconds(1)) {
      last_report_ = now;
      Progress p;
      p.nodes = control_.nodes.load(std::memory_order_relaxed);
      p.elapsed = now - control_.started;
      const double secs = std::chrono::duration<double>(p.elapsed).count();
      p.nodes_per_second = secs > 0 ? static_cast<double>(p.nodes) / secs : 0.0;
      p.depth_histogram = histogram_;
      control_.on_progress(p);
    }
    return true;
  }

  const MoveTable& table_;
  Index n_;
  Mode mode_;
  Heuristic heuristic_;
  SharedControl& control_;
  bool count_all_;
  bool reporter_;
  VisitedSet visited_;
  std::vector<unsigned> free_degree_;
  std::vector<std::uint64_t> mark_;
  std::uint64_t epoch_ = 0;
  unsigned max_degree_ = 0;
  std::vector<Index> path_;
  std::vector<Index> candidates_;
  std::vector<std::size_t> cand_count_;
  std::vector<std::size_t> cand_pos_;
  std::vector<std::optional<Index>> forced_;
  std::optional<MagicConstraints> magic_;
  std::mt19937_64 rng_;
  bool seeded_;
  std::uint64_t nodes_ = 0;
  std::uint64_t flushed_ = 0;
  std::uint64_t solutions_ = 0;
  std::vector<std::uint64_t> histogram_;
  Clock::time_point last_report_ = Clock::now();
};

inline void check_prefix(const Shape& shape, std::span<const Index> prefix) {
  std::vector<bool> seen(shape.cell_count(), false);
  for (std::size_t k = 0; k < prefix.size(); ++k) {
    if (prefix[k] >= shape.cell_count()) throw InputError("prefix cell " + std::to_string(prefix[k]) + " out of range");
    if (seen[prefix[k]]) throw InputError("prefix visits cell " + std::to_string(prefix[k]) + " twice");
    seen[prefix[k]] = true;
    if (k > 0 && !is_knight_move(shape, prefix[k - 1], prefix[k]))
      throw InputError("prefix step " + std::to_string(k) + " to " + std::to_string(k + 1) + " is not a knight move");
  }
}

// No tour can exist when some cell is isolated; no closed tour when some cell
// has fewer than two moves.
inline bool degree_obstruction(const MoveTable& table, Mode mode) {
  if (table.size() <= 1) return false;
  const unsigned need = mode == Mode::closed ? 2 : 1;
  for (Index i = 0; i < table.size(); ++i)
    if (table.degree(i) < need) return true;
  return false;
}

struct RunTotals {
  Status status = Status::exhausted_no_solution;
  std::optional<std::vector<Index>> path;
  std::uint64_t nodes = 0;
  std::uint64_t solutions = 0;
};

// Runs the search tree, split at its first decision level when jobs > 1.
inline RunTotals run_search(const MoveTable& table, Mode mode, const SearchConfig& config, bool count_all) {
  const Index n = table.size();
  SharedControl control;
  control.budget = config.budget;
  control.on_progress = config.on_progress;
  RunTotals totals;

  // Roots: each is a prefix whose subtree is searched independently.
  std::vector<std::vector<Index>> roots;
  if (!config.prefix.empty()) {
    roots.push_back(config.prefix);
  } else if (mode == Mode::closed) {
    roots.push_back({0});
  } else {
    for (Index s = 0; s < n; ++s) roots.push_back({s});
  }

  const unsigned jobs = std::max(1u, config.jobs);
  if (jobs == 1) {
    PathEngine engine(table, mode, config, control, count_all, true);
    for (const auto& root : roots) {
      if (engine.seed(root)) {
        const auto r = engine.run();
        if (r == PathEngine::Result::found) {
          totals.status = Status::found;
          totals.path = engine.path();
          break;
        }
        if (r == PathEngine::Result::stopped) {
          totals.status = Status::budget_exceeded;
          break;
        }
      }
      engine.clear();
    }
    engine.flush_nodes();
    totals.nodes = engine.nodes();
    totals.solutions = engine.solutions();
    return totals;
  }

  // Expand roots by one level so workers get comparable subtrees.
  std::vector<std::vector<Index>> branches;
  {
    PathEngine splitter(table, mode, config, control, count_all, false);
    for (const auto& root : roots) {
      if (splitter.seed(root)) {
        if (root.size() == n) {
          branches.push_back(root);
        } else {
          for (Index v : splitter.ordered_moves()) {
            auto b = root;
            b.push_back(v);
            branches.push_back(std::move(b));
          }
        }
      }
      splitter.clear();
    }
  }

  std::atomic<std::size_t> next{0};
  std::mutex result_mutex;
  std::vector<std::thread> workers;
  std::atomic<std::uint64_t> solutions{0};
  std::atomic<std::uint64_t> nodes{0};
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      PathEngine engine(table, mode, config, control, count_all, w == 0);
      while (!control.stop.load()) {
        const std::size_t i = next.fetch_add(1);
        if (i >= branches.size()) break;
        if (engine.seed(branches[i])) {
          const auto r = engine.run();
          if (r == PathEngine::Result::found) {
            std::lock_guard lock(result_mutex);
            if (!totals.path) totals.path = engine.path();
            control.stop = true;
          }
        }
        engine.clear();
      }
      engine.flush_nodes();
      nodes += engine.nodes();
      solutions += engine.solutions();
    });
  }
  for (auto& t : workers) t.join();
  totals.nodes = nodes.load();
  totals.solutions = solutions.load();
  if (totals.path) totals.status = Status::found;
  else if (control.budget_hit) totals.status = Status::budget_exceeded;
  return totals;
}

inline void assert_sound(const Tour& tour, Mode mode) {
  const auto report = validate(tour);
  bool ok = report.valid;
  if (mode == Mode::closed) ok = ok && report.closure == Closure::closed;
  if (mode == Mode::magic) {
    const auto magic = magic_report(grid_from_tour(tour));
    ok = ok && magic.is_magic.value_or(false);
  }
  if (!ok) throw std::logic_error("search produced a tour that fails its own checks");
}

inline SearchOutcome finish(const Shape& shape, Mode mode, RunTotals totals, Clock::time_point started) {
  SearchOutcome out;
  out.status = totals.status;
  out.nodes_expanded = totals.nodes;
  if (totals.path) {
    out.tour.emplace(shape, std::move(*totals.path));
    assert_sound(*out.tour, mode);
  }
  out.elapsed = Clock::now() - started;
  return out;
}

}  // namespace detail

inline SearchOutcome find_magic_tour(const Shape& shape, const SearchConfig& config);

// Open or closed tour search. Closed tours start at flat index 0; open tours
// try every start cell in flat order. A prefix pins the start and first steps.
inline SearchOutcome find_tour(const Shape& shape, const SearchConfig& config) {
  if (config.mode == Mode::magic) return find_magic_tour(shape, config);
  if (config.quartile_pruning) throw InputError("quartile pruning applies to magic searches only");
  detail::check_prefix(shape, config.prefix);
  const auto started = detail::Clock::now();
  const MoveTable table = build_move_table(shape);
  if (detail::degree_obstruction(table, config.mode) ||
      (config.mode == Mode::closed && table.size() < 3)) {
    detail::RunTotals none;
    return detail::finish(shape, config.mode, none, started);
  }
  return detail::finish(shape, config.mode, detail::run_search(table, config.mode, config, false), started);
}

// Magic tour search: cells are numbered in visit order and every placement is
// checked against the line-sum rules of MagicConstraints.
inline SearchOutcome find_magic_tour(const Shape& shape, const SearchConfig& config) {
  if (!shape.is_cubic()) throw DomainError("magic search needs a hypercube, not " + shape.to_string());
  const auto verdict = magic_tour_feasible(shape.order(), static_cast<int>(shape.dimension()));
  if (verdict.answer == Answer::impossible && verdict.provenance.kind == Provenance::Kind::proven)
    throw InfeasibleError(verdict);
  if (config.quartile_pruning && shape.order() != 4) throw DomainError("quartile pruning needs order 4");
  detail::check_prefix(shape, config.prefix);
  SearchConfig effective = config;
  effective.mode = Mode::magic;
  if (effective.budget.unlimited() && !effective.exhaustive) effective.budget.wall = default_magic_budget;
  const auto started = detail::Clock::now();
  const MoveTable table = build_move_table(shape);
  if (detail::degree_obstruction(table, Mode::magic)) {
    detail::RunTotals none;
    return detail::finish(shape, Mode::magic, none, started);
  }
  return detail::finish(shape, Mode::magic, detail::run_search(table, Mode::magic, effective, false), started);
}

struct CountResult {
  std::uint64_t count = 0;
  bool complete = false;  // false: budget ran out, count is a lower bound only
  std::uint64_t nodes = 0;
};

// Number of closed tour sequences starting at flat index 0 (each cycle counts
// once per direction).
inline CountResult exhaustive_closed_count(const Shape& shape, const Budget& budget = {}, unsigned jobs = 1) {
  const MoveTable table = build_move_table(shape);
  if (detail::degree_obstruction(table, Mode::closed) || table.size() < 3) return {0, true, 0};
  SearchConfig config;
  config.mode = Mode::closed;
  config.budget = budget;
  config.exhaustive = true;
  config.jobs = jobs;
  const auto totals = detail::run_search(table, Mode::closed, config, true);
  return {totals.solutions, totals.status != Status::budget_exceeded, totals.nodes};
}

}  // namespace ndkt
