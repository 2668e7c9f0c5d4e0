#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cubeknot {

/// Lattice point of a grid: column grows to the right, row grows upward.
struct Point {
  int col = 0;
  int row = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// True iff `a` is below `b` in the componentwise order on lattice points.
constexpr bool point_below(Point a, Point b) noexcept { return a.col <= b.col && a.row <= b.row; }

enum class MarkKind : std::uint8_t { X, O };

/// Corner shape at a marking, named by its position on the rectangle the two
/// incident segments bound: NE means the segments leave going west and south.
enum class Corner : std::uint8_t { NE, NW, SE, SW };

const char* to_string(Corner c) noexcept;
Corner corner_from_string(std::string_view s);

/// Corner shape from the directions the vertical and horizontal segments
/// leave the marking (+1 = up / right, -1 = down / left).
constexpr Corner corner_from_directions(int vertical_dir, int horizontal_dir) noexcept {
  if (vertical_dir < 0) return horizontal_dir < 0 ? Corner::NE : Corner::NW;
  return horizontal_dir < 0 ? Corner::SE : Corner::SW;
}

class GridError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A grid diagram of size n. Row r holds its X marking in column xcol[r] and
/// its O marking in column ocol[r]; row 0 is the bottom row. Vertical edges
/// run X -> O, horizontal edges O -> X, and vertical edges cross over.
///
/// The X-bend of row r (its "bend id") is the horizontal edge of row r ending
/// at the X, followed by the vertical edge leaving that X.
class GridDiagram {
 public:
  GridDiagram() = default;
  GridDiagram(std::vector<int> xcol, std::vector<int> ocol);

  int size() const noexcept { return static_cast<int>(xcol_.size()); }
  const std::vector<int>& xcol() const noexcept { return xcol_; }
  const std::vector<int>& ocol() const noexcept { return ocol_; }

  int x_col(int row) const { return xcol_[static_cast<std::size_t>(row)]; }
  int o_col(int row) const { return ocol_[static_cast<std::size_t>(row)]; }
  /// Row of the X / O marking in a column. Requires a valid grid.
  int x_row(int col) const { return xrow_[static_cast<std::size_t>(col)]; }
  int o_row(int col) const { return orow_[static_cast<std::size_t>(col)]; }

  /// Bend that follows bend `row` along the orientation: the row of the O
  /// where the vertical edge of `row` ends.
  int next_bend(int row) const { return o_row(x_col(row)); }

  friend bool operator==(const GridDiagram& a, const GridDiagram& b) {
    return a.xcol_ == b.xcol_ && a.ocol_ == b.ocol_;
  }

 private:
  std::vector<int> xcol_, ocol_;
  std::vector<int> xrow_, orow_;  // inverses; filled only when the arrays are permutations
};

struct GridReport {
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
};

GridReport validate_grid(const GridDiagram& g);
bool is_valid_grid(const GridDiagram& g) noexcept;

struct Marking {
  MarkKind kind;
  Point pos;
  friend bool operator==(const Marking&, const Marking&) = default;
};

/// Each component is the cyclic marking sequence X, O, X, O, ... following
/// the orientation, starting from the X in its lowest row.
std::vector<std::vector<Marking>> trace(const GridDiagram& g);
int component_count(const GridDiagram& g);

/// Axis-parallel segment between two markings, oriented from `from` to `to`.
struct Segment {
  Point from;
  Point to;
  bool vertical() const noexcept { return from.col == to.col; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

Segment vertical_arm(const GridDiagram& g, int bend);
Segment horizontal_arm(const GridDiagram& g, int bend);

struct Crossing {
  Point pos;
  int over_bend = 0;   // bend owning the vertical (over) segment
  int under_bend = 0;  // bend owning the horizontal (under) segment
  int sign = 0;
};

std::vector<Crossing> crossings(const GridDiagram& g);

/// Sum of crossing signs. Throws GridError for links.
int writhe(const GridDiagram& g);

struct CornerCensus {
  int x_ne = 0, x_nw = 0, x_se = 0, x_sw = 0;
  int o_ne = 0, o_nw = 0, o_se = 0, o_sw = 0;

  int x_total() const noexcept { return x_ne + x_nw + x_se + x_sw; }
  int o_total() const noexcept { return o_ne + o_nw + o_se + o_sw; }
  int count(MarkKind m, Corner c) const noexcept;
  friend bool operator==(const CornerCensus&, const CornerCensus&) = default;
};

Corner corner_at(const GridDiagram& g, MarkKind m, int row);
CornerCensus corner_census(const GridDiagram& g);

/// Symmetries used by property tests.
GridDiagram rotate_180(const GridDiagram& g);
/// Reflection across the vertical axis; reverses every crossing.
GridDiagram mirror(const GridDiagram& g);
/// Exchanges the X and O markings, reversing the orientation.
GridDiagram swap_markings(const GridDiagram& g);
/// Cyclic shift of rows (dr) and columns (dc); preserves the knot type.
GridDiagram translate(const GridDiagram& g, int dc, int dr);

/// ".grid" text format. parse_grid throws GridParseError.
class GridParseError : public GridError {
 public:
  using GridError::GridError;
};

GridDiagram parse_grid(std::string_view text);
std::string serialize_grid(const GridDiagram& g);

}  // namespace cubeknot
