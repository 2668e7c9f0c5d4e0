#include "cubeknot/legendrian.hpp"

namespace cubeknot {

const char* to_string(Hand h) noexcept { return h == Hand::Left ? "left" : "right"; }

Hand hand_from_string(std::string_view s) {
  if (s == "left" || s == "L") return Hand::Left;
  if (s == "right" || s == "R") return Hand::Right;
  throw GridError("unknown hand '" + std::string(s) + "'");
}

FrontInvariants front_invariants(const CornerCensus& cc, int w, Hand hand) {
  FrontInvariants f;
  f.hand = hand;
  if (hand == Hand::Left) {
    f.down_cusps = cc.x_nw + cc.o_se;
    f.up_cusps = cc.o_nw + cc.x_se;
    f.front_writhe = w;
    f.maxima = cc.x_ne + cc.o_ne;
    f.minima = cc.x_sw + cc.o_sw;
  } else {
    f.down_cusps = cc.x_ne + cc.o_sw;
    f.up_cusps = cc.o_ne + cc.x_sw;
    f.front_writhe = -w;
    f.maxima = cc.x_nw + cc.o_nw;
    f.minima = cc.x_se + cc.o_se;
  }
  // The cusp total is even for any closed front, so both halvings are exact.
  f.tb = f.front_writhe - (f.down_cusps + f.up_cusps) / 2;
  f.rot = (f.down_cusps - f.up_cusps) / 2;
  return f;
}

FrontInvariants front_invariants(const GridDiagram& g, Hand hand) {
  const int w = writhe(g);  // throws for links
  return front_invariants(corner_census(g), w, hand);
}

BendIdentityReport check_bend_identities(const CornerCensus& cc, int w, int p) {
  BendIdentityReport rep;
  rep.precondition_ok = true;
  rep.writhe = w;
  const auto left = front_invariants(cc, w, Hand::Left);
  const auto right = front_invariants(cc, w, Hand::Right);
  rep.d_left = left.down_cusps;
  rep.u_left = left.up_cusps;
  rep.d_right = right.down_cusps;
  rep.u_right = right.up_cusps;
  rep.d_left_ok = rep.d_left == 2 + w + p;
  rep.u_left_ok = rep.u_left == w + 3 * p - 2;
  rep.d_right_ok = rep.d_right == 2 - p - w;
  rep.u_right_ok = rep.u_right == 2 - p - w;
  rep.extrema_ok = left.maxima == left.minima && right.maxima == right.minima;
  rep.writhe_bound_ok = -p - 2 <= w && w < 2 - p;
  return rep;
}

BendIdentityReport check_bend_identities(const GridDiagram& g, int p) {
  BendIdentityReport rep;
  if (p < 3 || p % 2 == 0) {
    rep.precondition_failure = "p must be odd and at least 3";
    return rep;
  }
  if (!is_valid_grid(g)) {
    rep.precondition_failure = "invalid grid";
    return rep;
  }
  if (component_count(g) != 1) {
    rep.precondition_failure = "grid is a link";
    return rep;
  }
  if (g.size() != p + 2) {
    rep.precondition_failure = "grid size is not p+2";
    return rep;
  }
  const int w = writhe(g);
  const auto cc = corner_census(g);
  const auto left = front_invariants(cc, w, Hand::Left);
  if (left.tb != -2 * p || left.rot != 2 - p) {
    rep.precondition_failure = "left front is not (tb, rot) = (-2p, 2-p)";
    return rep;
  }
  return check_bend_identities(cc, w, p);
}

GridDiagram stabilize(const GridDiagram& g, MarkKind marking, int row, Corner kind) {
  if (!is_valid_grid(g)) throw GridError("stabilize: invalid grid");
  const int n = g.size();
  if (row < 0 || row >= n) throw GridError("stabilize: row out of range");
  const int col = marking == MarkKind::X ? g.x_col(row) : g.o_col(row);
  const bool new_col_right = kind == Corner::NE || kind == Corner::SE;
  const bool new_row_above = kind == Corner::NE || kind == Corner::NW;

  // Indices in the enlarged grid.
  const int old_c = new_col_right ? col : col + 1;
  const int new_c = new_col_right ? col + 1 : col;
  const int old_r = new_row_above ? row : row + 1;
  const int new_r = new_row_above ? row + 1 : row;
  auto shift_col = [&](int c) { return c < new_c ? c : c + 1; };

  std::vector<int> x(static_cast<std::size_t>(n + 1)), o(static_cast<std::size_t>(n + 1));
  for (int r = 0; r < n; ++r) {
    const int rr = r < new_r ? r : r + 1;
    x[static_cast<std::size_t>(rr)] = g.x_col(r) == col ? old_c : shift_col(g.x_col(r));
    o[static_cast<std::size_t>(rr)] = g.o_col(r) == col ? old_c : shift_col(g.o_col(r));
  }
  // Two markings of the stabilized type on the anti-diagonal of the block,
  // the opposite type at its new/new corner.
  auto& same = marking == MarkKind::X ? x : o;
  auto& other = marking == MarkKind::X ? o : x;
  same[static_cast<std::size_t>(old_r)] = new_c;
  same[static_cast<std::size_t>(new_r)] = old_c;
  other[static_cast<std::size_t>(new_r)] = new_c;
  return {std::move(x), std::move(o)};
}

bool is_legendrian_preserving(MarkKind marking, Corner kind, Hand hand) noexcept {
  // Same for both marking types: the new corner must be one that smooths.
  (void)marking;
  if (hand == Hand::Left) return kind == Corner::NE || kind == Corner::SW;
  return kind == Corner::NW || kind == Corner::SE;
}

}  // namespace cubeknot
