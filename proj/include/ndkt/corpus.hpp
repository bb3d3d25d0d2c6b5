#pragma once

// The published tours bundled with the library, and the checks that each one
// still has the properties its caption claims.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ndkt/corpus_data.hpp"
#include "ndkt/magic.hpp"
#include "ndkt/tour.hpp"
#include "ndkt/tour_file.hpp"

namespace ndkt {

// 64-bit FNV-1a.
inline std::uint64_t content_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Properties each bundled tour is recorded as having.
struct ExpectedProperties {
  std::optional<Closure> closure;
  std::optional<Sum> magic_constant;        // all axis lines hit this sum
  std::optional<bool> diagonally_magic;
  std::optional<Sum> row_magic_only;        // axis-0 lines hit this sum, axis-1 lines never do
};

struct CorpusEntry {
  std::string_view id;
  std::string_view caption;
  std::string_view text;
  std::uint64_t digest;
  ExpectedProperties expected;

  Grid grid() const { return parse_tour_file(text); }
};

inline const std::array<CorpusEntry, 8>& corpus_entries() {
  namespace d = corpus_data;
  static const std::array<CorpusEntry, 8> entries = {{
      {"fig1b", "6x6 closed tour whose rows, but not columns, sum to 111", d::fig1b, d::fig1b_digest,
       {std::nullopt, std::nullopt, std::nullopt, 111}},
      {"fig2", "closed magic tour of the 4x4x4 cube, diagonals magic too", d::fig2, d::fig2_digest,
       {Closure::closed, 130, true, std::nullopt}},
      {"fig3", "open magic tour of the 4x4x4 cube, diagonals magic too", d::fig3, d::fig3_digest,
       {Closure::open, 130, true, std::nullopt}},
      {"fig6", "closed tour on the smallest 4D box that has one", d::fig6, d::fig6_digest,
       {Closure::closed, std::nullopt, std::nullopt, std::nullopt}},
      {"fig7", "open tour on the same 4D box", d::fig7, d::fig7_digest,
       {Closure::open, std::nullopt, std::nullopt, std::nullopt}},
      {"fig8", "closed tour on the smallest 5D box that has one", d::fig8, d::fig8_digest,
       {Closure::closed, std::nullopt, std::nullopt, std::nullopt}},
      {"fig9", "magic tour of the order-4 4D cube; space diagonals not magic", d::fig9,
       d::fig9_digest, {std::nullopt, 514, false, std::nullopt}},
      {"fig10", "magic tour of the order-4 5D cube", d::fig10, d::fig10_digest,
       {std::nullopt, 2050, std::nullopt, std::nullopt}},
  }};
  return entries;
}

inline const CorpusEntry* find_corpus_entry(std::string_view id) {
  for (const auto& e : corpus_entries())
    if (e.id == id) return &e;
  return nullptr;
}

struct EntryResult {
  std::string id;
  bool passed = true;
  std::vector<std::string> failures;  // "<id>: <property>: <detail>"
  TourReport tour;
  std::optional<MagicReport> magic;
};

inline EntryResult verify_corpus_entry(const CorpusEntry& entry) {
  EntryResult r;
  r.id = std::string(entry.id);
  auto fail = [&](const std::string& property, const std::string& detail) {
    r.passed = false;
    r.failures.push_back(r.id + ": " + property + ": " + detail);
  };

  if (content_digest(entry.text) != entry.digest) fail("digest", "transcription text changed since it was recorded");
  std::optional<Grid> grid;
  try {
    grid = entry.grid();
  } catch (const ParseError& e) {
    fail("parse", e.what());
    return r;
  }

  r.tour = validate(*grid);
  if (!r.tour.valid) fail("tour", r.tour.first_violation ? r.tour.first_violation->reason : "invalid");
  const ExpectedProperties& x = entry.expected;
  if (x.closure && r.tour.valid && r.tour.closure != *x.closure)
    fail("closure", std::string("expected ") + to_string(*x.closure) + ", found " + to_string(r.tour.closure));

  if (!grid->shape().is_cubic()) return r;
  MagicOptions options;
  options.include_diagonals = true;
  r.magic = magic_report(*grid, options);
  const MagicReport& m = *r.magic;

  auto first_off_line = [&](std::size_t axis, Sum target, bool want_equal) -> std::string {
    for (const auto& ls : m.line_sums) {
      if (axis != SIZE_MAX && ls.axis != axis) continue;
      if ((ls.sum == target) != want_equal)
        return "axis " + std::to_string(ls.axis) + " line from " + to_string(grid->shape().cell_at(ls.first)) +
               " sums to " + std::to_string(ls.sum);
    }
    return {};
  };

  if (x.magic_constant) {
    if (*m.magic_constant != *x.magic_constant)
      fail("magic constant", "expected " + std::to_string(*x.magic_constant) + ", computed " +
                                 std::to_string(*m.magic_constant));
    if (!m.is_magic.value_or(false)) fail("magic", first_off_line(SIZE_MAX, *x.magic_constant, true));
  }
  if (x.diagonally_magic && m.is_diagonally_magic != x.diagonally_magic)
    fail("diagonals", std::to_string(m.magic_diagonal_count) + "/" + std::to_string(m.diagonal_sums->size()) +
                          " space diagonals magic");
  if (x.row_magic_only) {
    const std::string row = first_off_line(0, *x.row_magic_only, true);
    if (!row.empty()) fail("rows", row);
    for (std::size_t axis = 1; axis < grid->shape().dimension(); ++axis) {
      const std::string col = first_off_line(axis, *x.row_magic_only, false);
      if (!col.empty()) fail("columns", col);
    }
  }
  return r;
}

inline std::vector<EntryResult> corpus_verify_all() {
  std::vector<EntryResult> out;
  for (const auto& e : corpus_entries()) out.push_back(verify_corpus_entry(e));
  return out;
}

}  // namespace ndkt
