#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cubeknot/grid.hpp"

namespace cubeknot {

enum class Label : std::uint8_t { X, Y, Z };
enum class Axis : std::uint8_t { X, Y, Z };

const char* to_string(Label l) noexcept;
const char* to_string(Axis a) noexcept;
Axis axis_from_string(std::string_view s);

/// Unit cell (i, j, k) of the n x n x n lattice, standing for its center.
struct Cell {
  int i = 0, j = 0, k = 0;
  int operator[](int axis) const noexcept { return axis == 0 ? i : (axis == 1 ? j : k); }
  int& operator[](int axis) noexcept { return axis == 0 ? i : (axis == 1 ? j : k); }
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct Mark {
  Label label;
  Cell cell;
  friend auto operator<=>(const Mark&, const Mark&) = default;
};

struct CubeDiagram {
  int n = 0;
  std::vector<Mark> marks;
};

/// Oriented lattice segment between two marks: X -> Y -> Z -> X.
struct CubeSegment {
  Cell from;
  Cell to;
  int axis = 0;  // 0, 1, 2 for x, y, z
};

struct CubeReport {
  std::vector<std::string> violations;
  bool marking_ok = true;
  bool crossing_ok = true;
  bool ok() const noexcept { return violations.empty(); }
};

/// Marking conditions flat by flat, then crossing conditions in the three
/// projections by enumerating every segment pair.
CubeReport validate_cube(const CubeDiagram& c);

/// Segments joining marks that share two coordinates, oriented by label.
std::vector<CubeSegment> cube_segments(const CubeDiagram& c);

/// Projection along `axis`. Grid coordinates are cyclic: the z-projection
/// uses (col, row) = (i, j), x uses (j, k), y uses (k, i). The grid X is the
/// mark where the vertical edge starts: Z for z, X for x, Y for y.
/// Throws GridError if the marking conditions fail.
GridDiagram project(const CubeDiagram& c, Axis axis);

struct CubeBend {
  Axis axis;
  Cell vertex;
  CubeSegment incoming;
  CubeSegment outgoing;
};

/// One bend per flat of the given axis, ordered by flat level.
std::vector<CubeBend> cube_bends(const CubeDiagram& c, Axis axis);

class CubeParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// ".cube" format: `cube <n>` then 3n lines `<label> <i> <j> <k>`.
CubeDiagram parse_cube(std::string_view text);
/// Canonical form: marks sorted by label, then cell.
std::string serialize_cube(const CubeDiagram& c);

bool same_marks(const CubeDiagram& a, const CubeDiagram& b);

}  // namespace cubeknot
