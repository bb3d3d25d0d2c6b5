#pragma once

// Magic-constant arithmetic and line/diagonal sum reports. All sums are exact
// integers.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ndkt/error.hpp"
#include "ndkt/lattice.hpp"
#include "ndkt/tour.hpp"

namespace ndkt {

using Sum = std::int64_t;

// m (m^d + 1) / 2, the common line sum of a 1..m^d numbering.
inline Sum magic_constant(int order, int dimension) {
  if (order < 1 || dimension < 1) throw InputError("magic_constant needs order >= 1 and dimension >= 1");
  constexpr unsigned __int128 limit = static_cast<unsigned __int128>(INT64_MAX);
  unsigned __int128 power = 1;
  for (int i = 0; i < dimension; ++i) {
    power *= static_cast<unsigned>(order);
    if (power > limit) throw CapacityError("magic constant overflows 64 bits");
  }
  const unsigned __int128 value = static_cast<unsigned __int128>(order) * (power + 1) / 2;
  if (value > limit) throw CapacityError("magic constant overflows 64 bits");
  return static_cast<Sum>(value);
}

struct Ratio {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;

  double value() const { return denominator ? static_cast<double>(numerator) / static_cast<double>(denominator) : 0.0; }
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

inline std::string to_string(const Ratio& r) {
  return std::to_string(r.numerator) + "/" + std::to_string(r.denominator);
}

enum class RatioMode {
  axis_lines,      // rows, columns, pillars, ... only
  with_diagonals,  // space diagonals count toward both sides of the ratio
};

struct MagicOptions {
  bool include_diagonals = false;
  RatioMode ratio_mode = RatioMode::axis_lines;
};

struct LineSum {
  std::size_t axis = 0;
  Index first = 0;
  Sum sum = 0;
};

struct MagicReport {
  std::optional<Sum> magic_constant;  // absent for non-cubic shapes
  std::vector<LineSum> line_sums;
  std::vector<std::size_t> lines_per_axis;
  std::vector<std::size_t> magic_lines_per_axis;
  std::size_t magic_line_count = 0;
  std::size_t total_line_count = 0;
  std::optional<std::vector<Sum>> diagonal_sums;
  std::size_t magic_diagonal_count = 0;
  std::optional<bool> is_magic;
  std::optional<bool> is_diagonally_magic;
  std::optional<Ratio> magic_ratio;
};

namespace detail {

inline void require_numbering(const Grid& grid) {
  std::vector<Index> sequence;
  if (auto bad = invert_numbering(grid, sequence)) throw InputError("not a 1..N numbering: " + bad->reason);
}

}  // namespace detail

inline MagicReport magic_report(const Grid& grid, const MagicOptions& options = {}) {
  detail::require_numbering(grid);
  const Shape& shape = grid.shape();
  const bool cubic = shape.is_cubic();
  if (options.include_diagonals && !cubic)
    throw DomainError("space diagonals are only defined on hypercubes, not " + shape.to_string());

  MagicReport report;
  if (cubic) report.magic_constant = magic_constant(shape.order(), static_cast<int>(shape.dimension()));
  report.lines_per_axis.assign(shape.dimension(), 0);
  report.magic_lines_per_axis.assign(shape.dimension(), 0);

  for (const Line& line : enumerate_lines(shape)) {
    Sum sum = 0;
    for (Index cell : line.cells) sum += grid.at(cell);
    report.line_sums.push_back({line.axis, line.cells.front(), sum});
    ++report.lines_per_axis[line.axis];
    if (report.magic_constant && sum == *report.magic_constant) {
      ++report.magic_lines_per_axis[line.axis];
      ++report.magic_line_count;
    }
  }
  report.total_line_count = report.line_sums.size();

  if (!cubic) return report;

  report.is_magic = report.magic_line_count == report.total_line_count;
  Ratio ratio{report.magic_line_count, report.total_line_count};
  if (options.include_diagonals) {
    std::vector<Sum> sums;
    for (const auto& diag : enumerate_space_diagonals(shape)) {
      Sum sum = 0;
      for (Index cell : diag) sum += grid.at(cell);
      sums.push_back(sum);
      if (sum == *report.magic_constant) ++report.magic_diagonal_count;
    }
    report.is_diagonally_magic = report.magic_diagonal_count == sums.size();
    if (options.ratio_mode == RatioMode::with_diagonals) {
      ratio.numerator += report.magic_diagonal_count;
      ratio.denominator += sums.size();
    }
    report.diagonal_sums = std::move(sums);
  }
  report.magic_ratio = ratio;
  return report;
}

// One line, fixed field order:
//   magic=true constant=514 lines=256/256 axes=64/64,64/64,64/64,64/64 diag=0/8
// Fields that do not apply (non-cubic shape, diagonals not requested) are left out.
inline std::string to_key_values(const MagicReport& report) {
  std::ostringstream out;
  if (report.is_magic) out << "magic=" << (*report.is_magic ? "true" : "false") << ' ';
  if (report.magic_constant) out << "constant=" << *report.magic_constant << ' ';
  out << "lines=" << report.magic_line_count << '/' << report.total_line_count;
  out << " axes=";
  for (std::size_t a = 0; a < report.lines_per_axis.size(); ++a) {
    if (a) out << ',';
    out << report.magic_lines_per_axis[a] << '/' << report.lines_per_axis[a];
  }
  if (report.diagonal_sums) out << " diag=" << report.magic_diagonal_count << '/' << report.diagonal_sums->size();
  if (report.magic_ratio) out << " ratio=" << to_string(*report.magic_ratio);
  return out.str();
}

inline std::string render_table(const MagicReport& report) {
  std::ostringstream out;
  if (report.magic_constant) out << "magic constant   " << *report.magic_constant << '\n';
  else out << "magic constant   (undefined: shape is not a hypercube)\n";
  for (std::size_t a = 0; a < report.lines_per_axis.size(); ++a) {
    out << "axis " << a << " lines     " << report.magic_lines_per_axis[a] << '/' << report.lines_per_axis[a];
    Sum lo = 0;
    Sum hi = 0;
    bool first = true;
    for (const auto& ls : report.line_sums) {
      if (ls.axis != a) continue;
      if (first || ls.sum < lo) lo = ls.sum;
      if (first || ls.sum > hi) hi = ls.sum;
      first = false;
    }
    out << "  sums " << lo;
    if (hi != lo) out << ".." << hi;
    out << '\n';
  }
  if (report.diagonal_sums) {
    out << "space diagonals  " << report.magic_diagonal_count << '/' << report.diagonal_sums->size() << "  sums";
    for (Sum s : *report.diagonal_sums) out << ' ' << s;
    out << '\n';
  }
  if (report.is_magic) out << "magic            " << (*report.is_magic ? "yes" : "no") << '\n';
  if (report.is_diagonally_magic)
    out << "diagonally magic " << (*report.is_diagonally_magic ? "yes" : "no") << '\n';
  if (report.magic_ratio) out << "magic ratio      " << to_string(*report.magic_ratio) << '\n';
  return out.str();
}

struct QuartileReport {
  int group_count = 4;
  std::size_t balanced_line_count = 0;
  std::size_t total_line_count = 0;
  bool balanced = false;
};

// Group of number n among 1..N split into four consecutive quarters.
inline int quartile_group(std::uint64_t number, std::uint64_t cell_count) {
  return static_cast<int>((number - 1) / (cell_count / 4));
}

// Counts lines holding exactly one number from each quarter of 1..N.
inline QuartileReport quartile_report(const Grid& grid) {
  const Shape& shape = grid.shape();
  if (!shape.is_cubic() || shape.order() != 4)
    throw DomainError("quartile balance is defined for order-4 hypercubes, not " + shape.to_string());
  detail::require_numbering(grid);
  QuartileReport report;
  for (const Line& line : enumerate_lines(shape)) {
    unsigned mask = 0;
    for (Index cell : line.cells) mask |= 1u << quartile_group(grid.at(cell), shape.cell_count());
    ++report.total_line_count;
    if (mask == 0xFu) ++report.balanced_line_count;
  }
  report.balanced = report.balanced_line_count == report.total_line_count;
  return report;
}

inline std::string to_key_values(const QuartileReport& report) {
  return std::string("quartiles=") + (report.balanced ? "true" : "false") +
         " balanced=" + std::to_string(report.balanced_line_count) + "/" + std::to_string(report.total_line_count);
}

}  // namespace ndkt
