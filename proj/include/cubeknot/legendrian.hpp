#pragma once

#include <string>
#include <vector>

#include "cubeknot/grid.hpp"

namespace cubeknot {

/// Which front a grid is read as. Left: smooth NE/SW corners, NW/SE become
/// cusps, rotate 45 degrees counterclockwise. Right: reverse all crossings,
/// rotate clockwise, NE/SW become cusps.
enum class Hand { Left, Right };

const char* to_string(Hand h) noexcept;
Hand hand_from_string(std::string_view s);

struct FrontInvariants {
  Hand hand = Hand::Left;
  int down_cusps = 0;
  int up_cusps = 0;
  int front_writhe = 0;
  int tb = 0;
  int rot = 0;
  int maxima = 0;
  int minima = 0;
};

/// Invariants from the census and writhe alone; the enumeration uses this
/// to avoid recomputing either.
FrontInvariants front_invariants(const CornerCensus& census, int writhe, Hand hand);

/// Throws GridError for invalid grids and links.
FrontInvariants front_invariants(const GridDiagram& g, Hand hand);

/// Cusp counts and writhe checks for a size-(p+2) grid of the minimal
/// rotation class: D_L = 2 + w + p, U_L = w + 3p - 2, D_R = U_R = 2 - p - w,
/// equal maxima and minima, and -p - 2 <= w < 2 - p.
struct BendIdentityReport {
  bool precondition_ok = false;
  std::string precondition_failure;
  int writhe = 0;
  int d_left = 0, u_left = 0, d_right = 0, u_right = 0;
  bool d_left_ok = false;
  bool u_left_ok = false;
  bool d_right_ok = false;
  bool u_right_ok = false;
  bool extrema_ok = false;
  bool writhe_bound_ok = false;

  bool identities_hold() const noexcept {
    return d_left_ok && u_left_ok && d_right_ok && u_right_ok && extrema_ok;
  }
  bool all_ok() const noexcept { return precondition_ok && identities_hold() && writhe_bound_ok; }
};

/// Checks the identities on raw counts without any precondition.
BendIdentityReport check_bend_identities(const CornerCensus& census, int writhe, int p);

/// Full check: the grid must be a valid knot of size p+2 whose left front has
/// tb = -2p and rot = 2 - p. Precondition failures are reported, not thrown.
BendIdentityReport check_bend_identities(const GridDiagram& g, int p);

/// Stabilization: the marking of kind `marking` in `row` is replaced by an L
/// of three markings inside a new 2x2 block. The block's new row and column
/// sit on the sides named by `kind`; the corner of the L (a marking of the
/// opposite type) therefore has corner shape `kind`.
GridDiagram stabilize(const GridDiagram& g, MarkKind marking, int row, Corner kind);

/// Whether stabilize(marking, kind) keeps (tb, rot) of the given front.
bool is_legendrian_preserving(MarkKind marking, Corner kind, Hand hand) noexcept;

}  // namespace cubeknot
