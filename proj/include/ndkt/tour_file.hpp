#pragma once

// The ndkt v1 tour file:
//
//   ndkt v1
//   shape: 4 4 4
//   19 46 63 2          <- one printed row: axis 0 across
//   48 1 20 61          <- rows of a block: axis 1 down
//   ...
//                       <- blocks: one blank line per axis level above 1
//
// The writer output is canonical; the reader accepts any blank-line layout.

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ndkt/error.hpp"
#include "ndkt/lattice.hpp"
#include "ndkt/tour.hpp"

namespace ndkt {

inline constexpr std::string_view tour_file_header = "ndkt v1";

inline std::string write_tour_file(const Grid& grid) {
  const Shape& shape = grid.shape();
  std::string out(tour_file_header);
  out += "\nshape:";
  for (int e : shape.extents()) out += ' ' + std::to_string(e);
  out += '\n';
  const auto width = static_cast<Index>(shape.extent(0));
  const auto rows = static_cast<Index>(shape.cell_count() / width);
  for (Index r = 0; r < rows; ++r) {
    for (Index k = 0; k < width; ++k) {
      if (k) out += ' ';
      out += std::to_string(grid.at(r * width + k));
    }
    out += '\n';
    if (r + 1 == rows) break;
    // Block boundaries: one blank line for each axis 1.. that just wrapped.
    const Index next = (r + 1) * width;
    for (std::size_t axis = 1; axis + 1 < shape.dimension() && shape.coord(next, axis) == 0; ++axis) out += '\n';
  }
  return out;
}

namespace detail {

inline std::string_view trim_right(std::string_view s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

// Digits only; false on anything else or overflow of uint32.
inline bool parse_uint(std::string_view text, std::uint64_t& value) {
  if (text.empty() || text.size() > 10) return false;
  value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') return false;
    value = value * 10 + static_cast<std::uint64_t>(ch - '0');
  }
  return value <= 0xFFFFFFFFull;
}

}  // namespace detail

inline Grid parse_tour_file(std::string_view bytes) {
  using Kind = ParseError::Kind;
  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos <= bytes.size();) {
    const std::size_t nl = bytes.find('\n', pos);
    if (nl == std::string_view::npos) {
      if (pos < bytes.size()) lines.push_back(bytes.substr(pos));
      break;
    }
    lines.push_back(bytes.substr(pos, nl - pos));
    pos = nl + 1;
  }

  if (lines.empty() || detail::trim_right(lines[0]) != tour_file_header)
    throw ParseError(Kind::header, 1, 1, "expected header '" + std::string(tour_file_header) + "'");
  if (lines.size() < 2 || detail::trim_right(lines[1]).substr(0, 6) != "shape:")
    throw ParseError(Kind::shape, 2, 1, "expected 'shape:' line");

  std::vector<int> extents;
  for (const auto& tok : detail::split_tokens(detail::trim_right(lines[1]).substr(6))) {
    std::uint64_t v = 0;
    if (!detail::parse_uint(tok.text, v) || v == 0 || v > 0x7FFFFFFF)
      throw ParseError(Kind::shape, 2, tok.column + 6, "bad extent '" + std::string(tok.text) + "'");
    extents.push_back(static_cast<int>(v));
  }
  if (extents.empty()) throw ParseError(Kind::shape, 2, 7, "shape has no extents");
  Shape shape = [&] {
    try {
      return Shape(extents);
    } catch (const InputError& e) {
      throw ParseError(Kind::shape, 2, 1, e.what());
    }
  }();
  if (shape.cell_count() > max_table_cells) throw ParseError(Kind::shape, 2, 1, "shape too large");

  const std::uint64_t n = shape.cell_count();
  const auto width = static_cast<std::size_t>(shape.extent(0));
  std::vector<std::uint32_t> numbers;
  numbers.reserve(n);
  struct Where {
    std::size_t line = 0, column = 0;
  };
  std::vector<Where> where;
  where.reserve(n);
  for (std::size_t li = 2; li < lines.size(); ++li) {
    const auto tokens = detail::split_tokens(detail::trim_right(lines[li]));
    if (tokens.empty()) continue;
    if (tokens.size() != width)
      throw ParseError(Kind::row_length, li + 1, tokens.front().column,
                       "row has " + std::to_string(tokens.size()) + " values, expected " + std::to_string(width));
    for (const auto& tok : tokens) {
      std::uint64_t v = 0;
      if (!detail::parse_uint(tok.text, v))
        throw ParseError(Kind::token, li + 1, tok.column, "not a number: '" + std::string(tok.text) + "'");
      if (numbers.size() == n)
        throw ParseError(Kind::cell_count, li + 1, tok.column,
                         "more than " + std::to_string(n) + " values for shape " + shape.to_string());
      if (v < 1 || v > n)
        throw ParseError(Kind::out_of_range, li + 1, tok.column,
                         "value " + std::to_string(v) + " outside 1.." + std::to_string(n));
      numbers.push_back(static_cast<std::uint32_t>(v));
      where.push_back({li + 1, tok.column});
    }
  }
  if (numbers.size() != n)
    throw ParseError(Kind::cell_count, lines.size(), 1,
                     "found " + std::to_string(numbers.size()) + " values, shape " + shape.to_string() + " needs " +
                         std::to_string(n));

  std::vector<Index> first_at(n + 1, static_cast<Index>(n));
  for (Index cell = 0; cell < n; ++cell) {
    const std::uint32_t v = numbers[cell];
    if (first_at[v] != n) {
      const Index other = first_at[v];
      throw ParseError(Kind::duplicate, where[cell].line, where[cell].column,
                       "value " + std::to_string(v) + " appears at both " + to_string(shape.cell_at(other)) + " and " +
                           to_string(shape.cell_at(cell)));
    }
    first_at[v] = cell;
  }
  return Grid(std::move(shape), std::move(numbers));
}

}  // namespace ndkt
