#pragma once

// Tours as visiting sequences, grids as the numbered view printed in figures,
// and validation between the two.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ndkt/error.hpp"
#include "ndkt/lattice.hpp"

namespace ndkt {

// True when a and b differ in exactly two coordinates, by 1 and by 2.
inline bool is_knight_move(const Shape& shape, Index a, Index b) {
  int ones = 0;
  int twos = 0;
  for (std::size_t axis = 0; axis < shape.dimension(); ++axis) {
    const int delta = std::abs(shape.coord(a, axis) - shape.coord(b, axis));
    if (delta == 0) continue;
    if (delta == 1) ++ones;
    else if (delta == 2) ++twos;
    else return false;
  }
  return ones == 1 && twos == 1;
}

// Visiting order as flat cell indices. Always a permutation of the cells;
// knight adjacency is what validate() checks.
class Tour {
 public:
  Tour(Shape shape, std::vector<Index> sequence) : shape_(std::move(shape)), sequence_(std::move(sequence)) {
    if (sequence_.size() != shape_.cell_count())
      throw InputError("tour has " + std::to_string(sequence_.size()) + " steps but shape " + shape_.to_string() +
                       " has " + std::to_string(shape_.cell_count()) + " cells");
    std::vector<bool> seen(sequence_.size(), false);
    for (Index cell : sequence_) {
      if (cell >= sequence_.size() || seen[cell])
        throw InputError("tour sequence is not a permutation of the cells (cell " + std::to_string(cell) + ")");
      seen[cell] = true;
    }
  }

  const Shape& shape() const noexcept { return shape_; }
  std::span<const Index> sequence() const noexcept { return sequence_; }
  std::size_t size() const noexcept { return sequence_.size(); }
  Index operator[](std::size_t step) const { return sequence_.at(step); }
  Index front() const { return sequence_.front(); }
  Index back() const { return sequence_.back(); }

  friend bool operator==(const Tour&, const Tour&) = default;

 private:
  Shape shape_;
  std::vector<Index> sequence_;
};

// Visit numbers 1..N stored per cell.
class Grid {
 public:
  Grid(Shape shape, std::vector<std::uint32_t> numbers) : shape_(std::move(shape)), numbers_(std::move(numbers)) {
    if (numbers_.size() != shape_.cell_count())
      throw InputError("grid has " + std::to_string(numbers_.size()) + " values but shape " + shape_.to_string() +
                       " has " + std::to_string(shape_.cell_count()) + " cells");
  }

  const Shape& shape() const noexcept { return shape_; }
  std::span<const std::uint32_t> numbers() const noexcept { return numbers_; }
  std::uint32_t at(Index cell) const { return numbers_.at(cell); }
  std::uint32_t at(const Cell& cell) const { return numbers_.at(shape_.index_of(cell)); }
  std::size_t size() const noexcept { return numbers_.size(); }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  Shape shape_;
  std::vector<std::uint32_t> numbers_;
};

enum class Closure { open, closed };

inline const char* to_string(Closure c) { return c == Closure::closed ? "closed" : "open"; }

struct Violation {
  enum class Kind { out_of_range, duplicate, missing, not_adjacent };
  Kind kind;
  // Visit number involved: the duplicated/missing number, or k for a failing k -> k+1 step.
  std::uint64_t step;
  std::string reason;
};

struct TourReport {
  bool valid = false;
  Closure closure = Closure::open;
  std::optional<Violation> first_violation;
};

namespace detail {

inline std::optional<Violation> first_step_violation(const Shape& shape, std::span<const Index> sequence) {
  for (std::size_t k = 0; k + 1 < sequence.size(); ++k) {
    if (!is_knight_move(shape, sequence[k], sequence[k + 1])) {
      return Violation{Violation::Kind::not_adjacent, k + 1,
                       "step " + std::to_string(k + 1) + " at " + to_string(shape.cell_at(sequence[k])) +
                           " to step " + std::to_string(k + 2) + " at " + to_string(shape.cell_at(sequence[k + 1])) +
                           " is not a knight move"};
    }
  }
  return std::nullopt;
}

inline TourReport report_for(const Shape& shape, std::span<const Index> sequence) {
  TourReport report;
  report.first_violation = first_step_violation(shape, sequence);
  report.valid = !report.first_violation;
  if (report.valid && sequence.size() >= 3 && is_knight_move(shape, sequence.front(), sequence.back()))
    report.closure = Closure::closed;
  return report;
}

// Position of each number, or the first numbering defect.
inline std::optional<Violation> invert_numbering(const Grid& grid, std::vector<Index>& sequence) {
  const Shape& shape = grid.shape();
  const std::size_t n = grid.size();
  constexpr Index unset = std::numeric_limits<Index>::max();
  sequence.assign(n, unset);
  std::optional<Violation> duplicate;
  for (Index cell = 0; cell < n; ++cell) {
    const std::uint32_t number = grid.at(cell);
    if (number < 1 || number > n) {
      return Violation{Violation::Kind::out_of_range, number,
                       "number " + std::to_string(number) + " at " + to_string(shape.cell_at(cell)) +
                           " is outside 1.." + std::to_string(n)};
    }
    Index& slot = sequence[number - 1];
    if (slot != unset) {
      if (!duplicate || number < duplicate->step) {
        duplicate = Violation{Violation::Kind::duplicate, number,
                              "number " + std::to_string(number) + " appears at both " +
                                  to_string(shape.cell_at(slot)) + " and " + to_string(shape.cell_at(cell))};
      }
      continue;
    }
    slot = cell;
  }
  std::optional<Violation> missing;
  for (std::size_t k = 0; k < n; ++k) {
    if (sequence[k] == unset) {
      missing = Violation{Violation::Kind::missing, k + 1, "number " + std::to_string(k + 1) + " is missing"};
      break;
    }
  }
  if (duplicate && (!missing || duplicate->step <= missing->step)) return duplicate;
  return missing;
}

}  // namespace detail

inline TourReport validate(const Tour& tour) { return detail::report_for(tour.shape(), tour.sequence()); }

// Checks the numbering is a bijection onto 1..N and that consecutive numbers
// are a knight move apart. Reports the first defect instead of throwing.
inline TourReport validate(const Grid& grid) {
  std::vector<Index> sequence;
  if (auto bad = detail::invert_numbering(grid, sequence)) return TourReport{false, Closure::open, std::move(bad)};
  return detail::report_for(grid.shape(), sequence);
}

inline Grid grid_from_tour(const Tour& tour) {
  std::vector<std::uint32_t> numbers(tour.size());
  for (std::size_t k = 0; k < tour.size(); ++k) numbers[tour[k]] = static_cast<std::uint32_t>(k + 1);
  return Grid(tour.shape(), std::move(numbers));
}

inline Tour tour_from_grid(const Grid& grid) {
  std::vector<Index> sequence;
  if (auto bad = detail::invert_numbering(grid, sequence)) throw InputError(bad->reason);
  return Tour(grid.shape(), std::move(sequence));
}

inline bool endpoints_same_color(const Tour& tour) {
  return cell_color(tour.shape(), tour.front()) == cell_color(tour.shape(), tour.back());
}

inline bool endpoints_same_color(const Grid& grid) { return endpoints_same_color(tour_from_grid(grid)); }

// Same cycle started from another step.
inline Tour rotated(const Tour& tour, std::size_t start) {
  std::vector<Index> seq(tour.sequence().begin(), tour.sequence().end());
  std::rotate(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(start % seq.size()), seq.end());
  return Tour(tour.shape(), std::move(seq));
}

inline Tour reversed(const Tour& tour) {
  std::vector<Index> seq(tour.sequence().rbegin(), tour.sequence().rend());
  return Tour(tour.shape(), std::move(seq));
}

// Axis permutation plus per-axis reflection that maps a shape onto itself.
// Original axis a lands on axis perm[a], mirrored when flip[a].
struct Symmetry {
  std::vector<std::size_t> perm;
  std::vector<bool> flip;

  Index apply(const Shape& shape, Index cell) const {
    Index out = 0;
    for (std::size_t a = 0; a < perm.size(); ++a) {
      int c = shape.coord(cell, a);
      if (flip[a]) c = shape.extent(a) - 1 - c;
      out += static_cast<Index>(c) * shape.stride(perm[a]);
    }
    return out;
  }
};

// All symmetries of the board, identity first.
inline std::vector<Symmetry> shape_symmetries(const Shape& shape) {
  const std::size_t d = shape.dimension();
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<Symmetry> out;
  do {
    bool preserves = true;
    for (std::size_t a = 0; a < d; ++a) preserves = preserves && shape.extent(a) == shape.extent(perm[a]);
    if (!preserves) continue;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
      Symmetry s{perm, std::vector<bool>(d)};
      for (std::size_t a = 0; a < d; ++a) s.flip[a] = (mask >> a) & 1;
      out.push_back(std::move(s));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline Grid transformed(const Grid& grid, const Symmetry& s) {
  std::vector<std::uint32_t> numbers(grid.size());
  for (Index cell = 0; cell < grid.size(); ++cell) numbers[s.apply(grid.shape(), cell)] = grid.at(cell);
  return Grid(grid.shape(), std::move(numbers));
}

// Lexicographically least sequence over board symmetries and direction.
// An equality helper only; tours are never canonicalized implicitly.
inline std::vector<Index> canonical_sequence(const Tour& tour) {
  std::vector<Index> best(tour.sequence().begin(), tour.sequence().end());
  std::vector<Index> image(tour.size());
  for (const Symmetry& s : shape_symmetries(tour.shape())) {
    for (std::size_t k = 0; k < tour.size(); ++k) image[k] = s.apply(tour.shape(), tour[k]);
    best = std::min(best, image);
    std::reverse(image.begin(), image.end());
    best = std::min(best, image);
  }
  return best;
}

inline bool equivalent(const Tour& a, const Tour& b) {
  return a.shape() == b.shape() && canonical_sequence(a) == canonical_sequence(b);
}

}  // namespace ndkt
