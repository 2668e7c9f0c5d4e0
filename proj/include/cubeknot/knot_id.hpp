#pragma once

#include <vector>

#include "cubeknot/cube.hpp"
#include "cubeknot/grid.hpp"
#include "cubeknot/laurent.hpp"

namespace cubeknot {

/// Crossing budget for the bracket state sum.
inline constexpr int kMaxBracketCrossings = 30;
/// Above this many crossings the bracket switches from plain 2^c state
/// enumeration to the memoized boundary-state sum.
inline constexpr int kPlainStateSumLimit = 20;

/// Kauffman bracket in the variable A (exponents are powers of A),
/// normalized so the one-loop diagram is 1. Throws GridError for links or
/// above the crossing budget.
LaurentPoly kauffman_bracket(const GridDiagram& g);
/// Same value computed by each strategy, for cross-checking.
LaurentPoly kauffman_bracket_plain(const GridDiagram& g);
LaurentPoly kauffman_bracket_memo(const GridDiagram& g);

/// Jones polynomial with exponents in units of q = t^(1/2), so the left
/// trefoil -t^-4 + t^-3 + t^-1 is stored as -q^-8 + q^-6 + q^-2.
LaurentPoly jones(const GridDiagram& g);
/// Jones from a precomputed bracket and writhe.
LaurentPoly jones_from_bracket(const LaurentPoly& bracket, int writhe);

/// Renders a q-exponent polynomial in powers of t, e.g. "-t^-4 + t^-3 + t^-1".
std::string jones_t_string(const LaurentPoly& jones_q);

/// Size-(p+2) grids of the left-hand (p,2) torus knot whose left fronts have
/// tb = -2p and rot = 2 - p (kmin) or p - 2 (kmax). Throws for invalid p.
GridDiagram canonical_kmin_grid(int p);
GridDiagram canonical_kmax_grid(int p);

/// Size-(p+2) cube diagram over canonical_kmax_grid(p), found by lift search
/// and cached per p.
CubeDiagram kmax_cube(int p);

struct LegendrianClassSpec {
  int p = 0;
  int tb = 0;
  int rot = 0;
  friend bool operator==(const LegendrianClassSpec&, const LegendrianClassSpec&) = default;
};

/// Maximal-tb classes of the left-hand (p,2) torus knot: tb = -2p and
/// rot in { +-(p - 2 - 4t) : 0 <= t < (p-2)/2 }, sorted by rot descending.
std::vector<LegendrianClassSpec> legendrian_classes(int p);

}  // namespace cubeknot
