#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubeknot/cube.hpp"
#include "cubeknot/grid.hpp"

namespace cubeknot {

/// The pair of segments meeting at the X marking of row `id`: the horizontal
/// edge entering the X and the vertical edge leaving it.
struct XBend {
  int id = 0;
  Point x_corner;
  Segment horizontal;
  Segment vertical;
};

std::vector<XBend> xbend_decomposition(const GridDiagram& g);

/// b1 > b2 whenever a segment of b1 crosses over a segment of b2.
struct BendOrder {
  int n = 0;
  std::vector<std::pair<int, int>> relation;  // (over, under), sorted, unique
  bool acyclic = true;
  std::vector<int> cycle;  // b0 > b1 > ... > b0 when not acyclic
};

BendOrder partial_order(const GridDiagram& g);

/// z-level of each X-bend, indexed by bend id.
struct LiftAssignment {
  std::vector<int> height;
};

struct LiftOutcome {
  std::optional<CubeDiagram> cube;
  std::string violation;  // first violated condition when no cube
};

/// The lattice knot over g with X-bend `b` in the z-flat height[b]. Always
/// satisfies the marking conditions; the crossing conditions may fail.
CubeDiagram build_lift(const GridDiagram& g, const LiftAssignment& a);

/// Throws GridError for a non-bijective assignment or a link.
LiftOutcome lift_with_heights(const GridDiagram& g, const LiftAssignment& a);

/// Constraint form of liftability. A lift is a bijective height function
/// that respects every order pair and every side constraint: for a junction
/// O marking (between bends `a` and `t`) lying strictly left of the vertical
/// arm of bend `b` within its rows, or strictly above the horizontal arm of
/// `b` within its columns, h[b] may not lie strictly between h[a] and h[t].
struct SideConstraint {
  int bend;
  int a;
  int t;
  Axis projection;  // Axis::X for the (y,z) picture, Axis::Y for (z,x)
};

struct LiftConstraints {
  int n = 0;
  std::vector<std::pair<int, int>> order;  // (over, under)
  std::vector<SideConstraint> sides;
};

LiftConstraints lift_constraints(const GridDiagram& g);

enum class LiftMode { First, Count };

struct LiftSearchResult {
  std::optional<CubeDiagram> cube;           // First mode
  std::optional<LiftAssignment> assignment;  // First mode
  std::uint64_t count = 0;                   // Count mode: number of valid assignments
  std::uint64_t nodes = 0;                   // search tree nodes visited
};

/// Backtracking over heights, placed top-down along linear extensions of the
/// bend order, with side constraints checked as soon as they are decided.
LiftSearchResult lift_search(const GridDiagram& g, LiftMode mode);

/// Convenience wrappers.
std::optional<CubeDiagram> find_lift(const GridDiagram& g);
std::uint64_t count_lifts(const GridDiagram& g);

/// Lifting obstructions. Each pattern pairs a region attached to an X-bend
/// with the side projection in which a violation is forced.
enum class RegionKind { LeftOfVertical, AboveHorizontal };

struct ConfigurationPattern {
  int type;
  RegionKind region;
  Axis projection;
  const char* description;
};

const std::vector<ConfigurationPattern>& configuration_patterns();

struct Region {
  int col_lo, col_hi;  // inclusive cell-corner bounds of the shaded region
  int row_lo, row_hi;
};

struct ConfigurationMatch {
  int type = 0;
  int bend = 0;    // witnessing X-bend
  Region region{};
  std::vector<int> path;  // consecutive bends joined inside the region, from one side of `bend` to the other
};

/// Every match certifies that no lift exists.
std::vector<ConfigurationMatch> detect_type_configurations(const GridDiagram& g);

struct StabilizedLift {
  CubeDiagram cube;
  GridDiagram grid;  // z-projection of cube: g after the applied stabilizations
  std::vector<std::string> moves;  // applied stabilizations, in order
};

/// Lifts g after stabilizations that preserve the left front. Each round
/// applies the stabilization (or pair of them) that most lowers the least
/// number of violated side constraints, until lift_search succeeds.
StabilizedLift lift_with_stabilizations(const GridDiagram& g);

}  // namespace cubeknot
