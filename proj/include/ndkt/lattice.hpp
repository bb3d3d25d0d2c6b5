#pragma once

// n-dimensional board geometry: shapes, cells, the generalized knight move,
// axis lines and space diagonals.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ndkt/error.hpp"

namespace ndkt {

using Index = std::uint32_t;

// Move tables above this many cells are refused.
inline constexpr std::uint64_t max_table_cells = std::uint64_t{1} << 28;

struct Cell {
  std::vector<int> coords;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline std::string to_string(const Cell& cell) {
  std::string out = "(";
  for (std::size_t i = 0; i < cell.coords.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(cell.coords[i]);
  }
  return out + ")";
}

enum class Color : std::uint8_t { light = 0, dark = 1 };

inline const char* to_string(Color c) { return c == Color::light ? "light" : "dark"; }

// Parity of the coordinate sum. Every knight move flips it.
inline Color cell_color(const Cell& cell) {
  long long sum = 0;
  for (int c : cell.coords) sum += c;
  return (sum & 1) ? Color::dark : Color::light;
}

// Board extents, axis 0 varying fastest in the flat index.
class Shape {
 public:
  explicit Shape(std::vector<int> extents) : extents_(std::move(extents)) {
    if (extents_.empty()) throw InputError("shape must have at least one axis");
    std::uint64_t count = 1;
    strides_.reserve(extents_.size());
    for (int e : extents_) {
      if (e < 1) throw InputError("shape extents must be positive, got " + std::to_string(e));
      strides_.push_back(static_cast<Index>(count));
      count *= static_cast<std::uint64_t>(e);
      if (count > std::numeric_limits<Index>::max())
        throw InputError("shape has too many cells to index");
    }
    count_ = count;
  }

  Shape(std::initializer_list<int> extents) : Shape(std::vector<int>(extents)) {}

  // "3x4x2x2"
  static Shape parse(std::string_view text) {
    std::vector<int> extents;
    std::size_t pos = 0;
    while (true) {
      std::size_t next = text.find_first_of("xX", pos);
      std::string_view part = text.substr(pos, next == std::string_view::npos ? next : next - pos);
      if (part.empty()) throw InputError("bad shape '" + std::string(text) + "': empty extent");
      long long value = 0;
      for (char ch : part) {
        if (ch < '0' || ch > '9')
          throw InputError("bad shape '" + std::string(text) + "': extents must be positive integers");
        value = value * 10 + (ch - '0');
        if (value > std::numeric_limits<int>::max())
          throw InputError("bad shape '" + std::string(text) + "': extent too large");
      }
      if (value == 0) throw InputError("bad shape '" + std::string(text) + "': zero extent");
      extents.push_back(static_cast<int>(value));
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
    return Shape(std::move(extents));
  }

  std::size_t dimension() const noexcept { return extents_.size(); }
  std::uint64_t cell_count() const noexcept { return count_; }
  std::span<const int> extents() const noexcept { return extents_; }
  int extent(std::size_t axis) const { return extents_.at(axis); }
  Index stride(std::size_t axis) const { return strides_.at(axis); }

  bool is_cubic() const noexcept {
    return std::all_of(extents_.begin(), extents_.end(), [&](int e) { return e == extents_[0]; });
  }

  int order() const {
    if (!is_cubic()) throw DomainError("shape " + to_string() + " is not a hypercube");
    return extents_[0];
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < extents_.size(); ++i) {
      if (i) out += 'x';
      out += std::to_string(extents_[i]);
    }
    return out;
  }

  bool contains(const Cell& cell) const noexcept {
    if (cell.coords.size() != extents_.size()) return false;
    for (std::size_t a = 0; a < extents_.size(); ++a)
      if (cell.coords[a] < 0 || cell.coords[a] >= extents_[a]) return false;
    return true;
  }

  Index index_of(const Cell& cell) const {
    if (!contains(cell)) throw InputError("cell " + ndkt::to_string(cell) + " is outside shape " + to_string());
    Index idx = 0;
    for (std::size_t a = 0; a < extents_.size(); ++a) idx += static_cast<Index>(cell.coords[a]) * strides_[a];
    return idx;
  }

  Cell cell_at(Index index) const {
    if (index >= count_) throw InputError("flat index " + std::to_string(index) + " out of range");
    Cell cell;
    cell.coords.resize(extents_.size());
    for (std::size_t a = 0; a < extents_.size(); ++a) {
      cell.coords[a] = static_cast<int>(index % static_cast<Index>(extents_[a]));
      index /= static_cast<Index>(extents_[a]);
    }
    return cell;
  }

  int coord(Index index, std::size_t axis) const {
    return static_cast<int>((index / strides_[axis]) % static_cast<Index>(extents_[axis]));
  }

  friend bool operator==(const Shape& a, const Shape& b) { return a.extents_ == b.extents_; }

 private:
  std::vector<int> extents_;
  std::vector<Index> strides_;
  std::uint64_t count_ = 0;
};

inline Color cell_color(const Shape& shape, Index index) {
  long long sum = 0;
  for (std::size_t a = 0; a < shape.dimension(); ++a) sum += shape.coord(index, a);
  return (sum & 1) ? Color::dark : Color::light;
}

// A coordinate plane, first < second.
struct AxisPlane {
  std::size_t first;
  std::size_t second;

  friend bool operator==(const AxisPlane&, const AxisPlane&) = default;
};

// Planes in the order xy, xz, yz, xw, yw, zw, ... (by second axis, then first).
inline std::vector<AxisPlane> coordinate_planes(std::size_t dimension) {
  std::vector<AxisPlane> planes;
  for (std::size_t b = 1; b < dimension; ++b)
    for (std::size_t a = 0; a < b; ++a) planes.push_back({a, b});
  return planes;
}

namespace detail {

// Calls fn(target_index, plane_index) for every in-bounds knight step from `index`.
template <class Fn>
void for_each_knight_step(const Shape& shape, Index index, Fn&& fn) {
  const std::size_t d = shape.dimension();
  std::size_t plane = 0;
  for (std::size_t b = 1; b < d; ++b) {
    for (std::size_t a = 0; a < b; ++a, ++plane) {
      const int ca = shape.coord(index, a);
      const int cb = shape.coord(index, b);
      const int ea = shape.extent(a);
      const int eb = shape.extent(b);
      const long long sa = shape.stride(a);
      const long long sb = shape.stride(b);
      static constexpr int steps[8][2] = {{1, 2}, {1, -2}, {-1, 2}, {-1, -2}, {2, 1}, {2, -1}, {-2, 1}, {-2, -1}};
      for (const auto& s : steps) {
        const int na = ca + s[0];
        const int nb = cb + s[1];
        if (na < 0 || na >= ea || nb < 0 || nb >= eb) continue;
        fn(static_cast<Index>(index + s[0] * sa + s[1] * sb), plane);
      }
    }
  }
}

}  // namespace detail

// Sorted flat indices of the knight moves from `index`.
inline std::vector<Index> knight_neighbor_indices(const Shape& shape, Index index) {
  if (index >= shape.cell_count()) throw InputError("flat index " + std::to_string(index) + " out of range");
  std::vector<Index> out;
  detail::for_each_knight_step(shape, index, [&](Index j, std::size_t) { out.push_back(j); });
  std::sort(out.begin(), out.end());
  return out;
}

// Cells reachable by one knight move: two coordinates change, by 1 and 2.
// Sorted by flat index.
inline std::vector<Cell> knight_neighbors(const Shape& shape, const Cell& cell) {
  std::vector<Cell> out;
  for (Index j : knight_neighbor_indices(shape, shape.index_of(cell))) out.push_back(shape.cell_at(j));
  return out;
}

// Precomputed adjacency in compressed rows.
class MoveTable {
 public:
  explicit MoveTable(Shape shape) : shape_(std::move(shape)) {
    if (shape_.cell_count() > max_table_cells)
      throw CapacityError("shape " + shape_.to_string() + " has " + std::to_string(shape_.cell_count()) +
                          " cells; move tables are limited to 2^28");
    const auto n = static_cast<Index>(shape_.cell_count());
    offsets_.reserve(n + 1);
    offsets_.push_back(0);
    std::vector<Index> scratch;
    for (Index i = 0; i < n; ++i) {
      scratch.clear();
      detail::for_each_knight_step(shape_, i, [&](Index j, std::size_t) { scratch.push_back(j); });
      std::sort(scratch.begin(), scratch.end());
      targets_.insert(targets_.end(), scratch.begin(), scratch.end());
      offsets_.push_back(static_cast<std::uint64_t>(targets_.size()));
    }
  }

  const Shape& shape() const noexcept { return shape_; }
  Index size() const noexcept { return static_cast<Index>(offsets_.size() - 1); }

  std::span<const Index> neighbors(Index i) const {
    return {targets_.data() + offsets_[i], static_cast<std::size_t>(offsets_[i + 1] - offsets_[i])};
  }

  unsigned degree(Index i) const { return static_cast<unsigned>(offsets_[i + 1] - offsets_[i]); }

  bool adjacent(Index a, Index b) const {
    auto n = neighbors(a);
    return std::binary_search(n.begin(), n.end(), b);
  }

  unsigned min_degree() const {
    unsigned best = std::numeric_limits<unsigned>::max();
    for (Index i = 0; i < size(); ++i) best = std::min(best, degree(i));
    return best;
  }

  unsigned max_degree() const {
    unsigned best = 0;
    for (Index i = 0; i < size(); ++i) best = std::max(best, degree(i));
    return best;
  }

  // Directed edge count, i.e. twice the number of undirected edges.
  std::uint64_t edge_count() const noexcept { return targets_.size(); }

 private:
  Shape shape_;
  std::vector<std::uint64_t> offsets_;
  std::vector<Index> targets_;
};

inline MoveTable build_move_table(const Shape& shape) { return MoveTable(shape); }

struct DegreeClass {
  std::vector<int> per_plane;
  int total = 0;

  friend bool operator==(const DegreeClass&, const DegreeClass&) = default;
  friend auto operator<=>(const DegreeClass&, const DegreeClass&) = default;
};

// Per-cell knight move counts split by coordinate plane.
class DegreeProfile {
 public:
  explicit DegreeProfile(const Shape& shape) : shape_(shape), planes_(coordinate_planes(shape.dimension())) {
    if (shape.dimension() < 2) throw DomainError("degree profile needs at least two axes");
    if (shape.cell_count() > max_table_cells) throw CapacityError("shape too large for a degree profile");
    const auto n = static_cast<Index>(shape.cell_count());
    counts_.assign(static_cast<std::size_t>(n) * planes_.size(), 0);
    totals_.assign(n, 0);
    for (Index i = 0; i < n; ++i) {
      detail::for_each_knight_step(shape, i, [&](Index, std::size_t plane) {
        ++counts_[static_cast<std::size_t>(i) * planes_.size() + plane];
        ++totals_[i];
      });
    }
  }

  const Shape& shape() const noexcept { return shape_; }
  std::span<const AxisPlane> planes() const noexcept { return planes_; }

  std::span<const int> per_plane(Index cell) const {
    return {counts_.data() + static_cast<std::size_t>(cell) * planes_.size(), planes_.size()};
  }
  int total(Index cell) const { return totals_.at(cell); }

  int min_total() const { return *std::min_element(totals_.begin(), totals_.end()); }
  int max_total() const { return *std::max_element(totals_.begin(), totals_.end()); }

  DegreeClass profile(Index cell) const {
    auto p = per_plane(cell);
    return {std::vector<int>(p.begin(), p.end()), totals_.at(cell)};
  }

  std::set<DegreeClass> distinct() const {
    std::set<DegreeClass> out;
    for (Index i = 0; i < totals_.size(); ++i) out.insert(profile(i));
    return out;
  }

  // Profiles identified under swapping axes within the pairs (0,1), (2,3), ...
  // whenever the paired extents agree: the symmetry of a drawing that lays a
  // 4D board out as a board of boards. Each class is represented by its
  // lexicographically greatest member.
  std::set<DegreeClass> layout_classes() const {
    std::vector<std::vector<std::size_t>> perms = {identity()};
    for (std::size_t a = 0; a + 1 < shape_.dimension(); a += 2) {
      if (shape_.extent(a) != shape_.extent(a + 1)) continue;
      const std::size_t existing = perms.size();
      for (std::size_t k = 0; k < existing; ++k) {
        auto p = perms[k];
        std::swap(p[a], p[a + 1]);
        perms.push_back(std::move(p));
      }
    }
    std::set<DegreeClass> out;
    for (const auto& cls : distinct()) {
      DegreeClass best = cls;
      for (const auto& perm : perms) {
        DegreeClass image = permute(cls, perm);
        if (image > best) best = std::move(image);
      }
      out.insert(std::move(best));
    }
    return out;
  }

  // Relabels axes: axis a of the original becomes axis perm[a].
  DegreeClass permute(const DegreeClass& cls, const std::vector<std::size_t>& perm) const {
    DegreeClass image{std::vector<int>(planes_.size(), 0), cls.total};
    for (std::size_t p = 0; p < planes_.size(); ++p) {
      std::size_t a = perm[planes_[p].first];
      std::size_t b = perm[planes_[p].second];
      if (a > b) std::swap(a, b);
      image.per_plane[plane_index(a, b)] = cls.per_plane[p];
    }
    return image;
  }

 private:
  std::vector<std::size_t> identity() const {
    std::vector<std::size_t> p(shape_.dimension());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
    return p;
  }

  static std::size_t plane_index(std::size_t a, std::size_t b) { return b * (b - 1) / 2 + a; }

  Shape shape_;
  std::vector<AxisPlane> planes_;
  std::vector<int> counts_;
  std::vector<int> totals_;
};

inline DegreeProfile degree_profile(const Shape& shape) { return DegreeProfile(shape); }

// A maximal axis-aligned run of cells: row, column, pillar, post, ...
struct Line {
  std::size_t axis = 0;
  std::vector<Index> cells;
};

// Lines grouped by axis, each group ordered by the flat index of its first cell.
inline std::vector<Line> enumerate_lines(const Shape& shape) {
  if (shape.cell_count() > max_table_cells) throw CapacityError("shape too large to enumerate lines");
  std::vector<Line> lines;
  const auto n = static_cast<Index>(shape.cell_count());
  for (std::size_t axis = 0; axis < shape.dimension(); ++axis) {
    const Index stride = shape.stride(axis);
    const auto len = static_cast<Index>(shape.extent(axis));
    for (Index start = 0; start < n; ++start) {
      if (shape.coord(start, axis) != 0) continue;
      Line line{axis, {}};
      line.cells.reserve(len);
      for (Index k = 0; k < len; ++k) line.cells.push_back(start + k * stride);
      lines.push_back(std::move(line));
    }
  }
  return lines;
}

// The 2^(d-1) corner-to-corner diagonals of a hypercube, each starting at
// coordinate 0 on axis 0.
inline std::vector<std::vector<Index>> enumerate_space_diagonals(const Shape& shape) {
  const int m = shape.order();
  const std::size_t d = shape.dimension();
  std::vector<std::vector<Index>> out;
  for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << (d - 1)); ++signs) {
    std::vector<Index> diag;
    diag.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
      Index idx = 0;
      for (std::size_t a = 0; a < d; ++a) {
        const bool reversed = a > 0 && ((signs >> (a - 1)) & 1);
        idx += static_cast<Index>(reversed ? m - 1 - k : k) * shape.stride(a);
      }
      diag.push_back(idx);
    }
    out.push_back(std::move(diag));
  }
  return out;
}

}  // namespace ndkt
