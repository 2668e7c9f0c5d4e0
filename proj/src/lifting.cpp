#include "cubeknot/lifting.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "cubeknot/legendrian.hpp"

namespace cubeknot {

namespace {

bool strictly_between(int v, int a, int b) { return (a < v && v < b) || (b < v && v < a); }

void require_knot(const GridDiagram& g, const char* what) {
  if (!is_valid_grid(g)) throw GridError(std::string(what) + ": invalid grid");
  if (component_count(g) != 1) throw GridError(std::string(what) + ": grid is a link");
}

// Junction O between bend `a` (its vertical ends here) and bend `t` (its
// horizontal starts here) sits at (o_col(t), t).
bool in_region(const GridDiagram& g, RegionKind kind, int bend, Point junction) {
  if (kind == RegionKind::LeftOfVertical) {
    const Segment v = vertical_arm(g, bend);
    return junction.col < v.from.col && strictly_between(junction.row, v.from.row, v.to.row);
  }
  const Segment h = horizontal_arm(g, bend);
  return junction.row > h.from.row && strictly_between(junction.col, h.from.col, h.to.col);
}

class LiftSearcher {
 public:
  LiftSearcher(const GridDiagram& g, LiftMode mode) : g_(g), mode_(mode) {
    const auto cons = lift_constraints(g);
    n_ = cons.n;
    if (n_ > 64) throw GridError("lift_search: grids larger than 64 are not supported");
    above_.assign(static_cast<std::size_t>(n_), 0);
    for (const auto& [over, under] : cons.order) above_[static_cast<std::size_t>(under)] |= bit(over);
    as_bend_.resize(static_cast<std::size_t>(n_));
    for (const auto& s : cons.sides) as_bend_[static_cast<std::size_t>(s.bend)].push_back(bit(s.a) | bit(s.t));
    height_.assign(static_cast<std::size_t>(n_), -1);
  }

  LiftSearchResult run() {
    recurse(0, n_ - 1);
    return std::move(result_);
  }

 private:
  static std::uint64_t bit(int b) { return std::uint64_t{1} << b; }

  // Bends are placed from the top level down, so an unplaced bend always
  // ends up below every placed one.
  bool consistent(int u, std::uint64_t placed) const {
    for (std::uint64_t pair : as_bend_[static_cast<std::size_t>(u)]) {
      const std::uint64_t above = pair & placed;
      if (above != 0 && above != pair) return false;  // exactly one endpoint above u
    }
    return true;
  }

  bool recurse(std::uint64_t placed, int level) {
    ++result_.nodes;
    if (level < 0) {
      if (mode_ == LiftMode::Count) {
        ++result_.count;
        return false;
      }
      LiftAssignment a{height_};
      result_.cube = build_lift(g_, a);
      result_.assignment = std::move(a);
      result_.count = 1;
      return true;
    }
    for (int u = 0; u < n_; ++u) {
      if (placed & bit(u)) continue;
      if ((above_[static_cast<std::size_t>(u)] & ~placed) != 0) continue;
      if (!consistent(u, placed)) continue;
      height_[static_cast<std::size_t>(u)] = level;
      if (recurse(placed | bit(u), level - 1)) return true;
      height_[static_cast<std::size_t>(u)] = -1;
    }
    return false;
  }

  const GridDiagram& g_;
  LiftMode mode_;
  int n_ = 0;
  std::vector<std::uint64_t> above_;                 // bends that must sit above each bend
  std::vector<std::vector<std::uint64_t>> as_bend_;  // endpoint pairs of side constraints, by bend
  std::vector<int> height_;
  LiftSearchResult result_;
};

}  // namespace

std::vector<XBend> xbend_decomposition(const GridDiagram& g) {
  require_knot(g, "xbend_decomposition");
  std::vector<XBend> out;
  for (int r = 0; r < g.size(); ++r) out.push_back({r, {g.x_col(r), r}, horizontal_arm(g, r), vertical_arm(g, r)});
  return out;
}

BendOrder partial_order(const GridDiagram& g) {
  require_knot(g, "partial_order");
  BendOrder ord;
  ord.n = g.size();
  for (const auto& c : crossings(g)) ord.relation.emplace_back(c.over_bend, c.under_bend);
  std::sort(ord.relation.begin(), ord.relation.end());
  ord.relation.erase(std::unique(ord.relation.begin(), ord.relation.end()), ord.relation.end());

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(ord.n));
  for (const auto& [a, b] : ord.relation) adj[static_cast<std::size_t>(a)].push_back(b);
  std::vector<int> state(static_cast<std::size_t>(ord.n), 0), parent(static_cast<std::size_t>(ord.n), -1);
  std::function<bool(int)> dfs = [&](int u) {
    state[static_cast<std::size_t>(u)] = 1;
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (state[static_cast<std::size_t>(v)] == 1) {
        std::vector<int> cyc{v};
        for (int w = u; w != v; w = parent[static_cast<std::size_t>(w)]) cyc.push_back(w);
        std::reverse(cyc.begin() + 1, cyc.end());
        ord.cycle = std::move(cyc);
        return true;
      }
      if (state[static_cast<std::size_t>(v)] == 0) {
        parent[static_cast<std::size_t>(v)] = u;
        if (dfs(v)) return true;
      }
    }
    state[static_cast<std::size_t>(u)] = 2;
    return false;
  };
  for (int u = 0; u < ord.n && ord.acyclic; ++u)
    if (state[static_cast<std::size_t>(u)] == 0 && dfs(u)) ord.acyclic = false;
  return ord;
}

CubeDiagram build_lift(const GridDiagram& g, const LiftAssignment& a) {
  CubeDiagram c;
  c.n = g.size();
  for (int r = 0; r < g.size(); ++r) {
    const int h = a.height[static_cast<std::size_t>(r)];
    c.marks.push_back({Label::Z, {g.x_col(r), r, h}});
    c.marks.push_back({Label::Y, {g.o_col(r), r, h}});
    c.marks.push_back({Label::X, {g.x_col(r), g.next_bend(r), h}});
  }
  return c;
}

LiftOutcome lift_with_heights(const GridDiagram& g, const LiftAssignment& a) {
  require_knot(g, "lift_with_heights");
  const int n = g.size();
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  if (static_cast<int>(a.height.size()) != n) throw GridError("lift_with_heights: assignment has wrong length");
  for (int h : a.height) {
    if (h < 0 || h >= n || used[static_cast<std::size_t>(h)]) throw GridError("lift_with_heights: assignment is not a bijection");
    used[static_cast<std::size_t>(h)] = 1;
  }
  LiftOutcome out;
  auto cube = build_lift(g, a);
  const auto rep = validate_cube(cube);
  if (rep.ok()) out.cube = std::move(cube);
  else out.violation = rep.violations.front();
  return out;
}

LiftConstraints lift_constraints(const GridDiagram& g) {
  require_knot(g, "lift_constraints");
  LiftConstraints lc;
  lc.n = g.size();
  for (const auto& c : crossings(g)) lc.order.emplace_back(c.over_bend, c.under_bend);
  std::sort(lc.order.begin(), lc.order.end());
  lc.order.erase(std::unique(lc.order.begin(), lc.order.end()), lc.order.end());
  for (int t = 0; t < lc.n; ++t) {
    const Point junction{g.o_col(t), t};
    const int a = g.x_row(junction.col);
    for (int b = 0; b < lc.n; ++b) {
      if (b == a || b == t) continue;
      if (in_region(g, RegionKind::LeftOfVertical, b, junction)) lc.sides.push_back({b, a, t, Axis::X});
      if (in_region(g, RegionKind::AboveHorizontal, b, junction)) lc.sides.push_back({b, a, t, Axis::Y});
    }
  }
  return lc;
}

LiftSearchResult lift_search(const GridDiagram& g, LiftMode mode) {
  require_knot(g, "lift_search");
  return LiftSearcher(g, mode).run();
}

std::optional<CubeDiagram> find_lift(const GridDiagram& g) { return lift_search(g, LiftMode::First).cube; }

std::uint64_t count_lifts(const GridDiagram& g) { return lift_search(g, LiftMode::Count).count; }

const std::vector<ConfigurationPattern>& configuration_patterns() {
  static const std::vector<ConfigurationPattern> table = {
      {1, RegionKind::LeftOfVertical, Axis::X,
       "region left of the vertical arm, between its rows, out to the left edge; a z-edge there passes behind "
       "the arm in the (y,z) picture"},
      {2, RegionKind::AboveHorizontal, Axis::Y,
       "region above the horizontal arm, between its columns, up to the top edge; a z-edge there passes behind "
       "the arm in the (z,x) picture"},
  };
  return table;
}

std::vector<ConfigurationMatch> detect_type_configurations(const GridDiagram& g) {
  require_knot(g, "detect_type_configurations");
  const int n = g.size();
  const auto nz = static_cast<std::size_t>(n);

  // below[u][v]: h[u] < h[v] is forced by the crossing order.
  std::vector<std::vector<char>> below(nz, std::vector<char>(nz, 0));
  for (const auto& c : crossings(g)) below[static_cast<std::size_t>(c.under_bend)][static_cast<std::size_t>(c.over_bend)] = 1;
  for (std::size_t k = 0; k < nz; ++k)
    for (std::size_t i = 0; i < nz; ++i)
      if (below[i][k])
        for (std::size_t j = 0; j < nz; ++j)
          if (below[k][j]) below[i][j] = 1;

  // Bends in knot order, starting anywhere.
  std::vector<int> cycle;
  for (int r = 0, i = 0; i < n; ++i, r = g.next_bend(r)) cycle.push_back(r);

  std::vector<ConfigurationMatch> out;
  for (const auto& pat : configuration_patterns()) {
    for (int b = 0; b < n; ++b) {
      // joined[i]: the junction after cycle[i] lies in b's region.
      std::vector<char> joined(nz, 0);
      bool any = false;
      for (int i = 0; i < n; ++i) {
        const int u = cycle[static_cast<std::size_t>(i)];
        const Point junction{g.x_col(u), g.next_bend(u)};
        joined[static_cast<std::size_t>(i)] = in_region(g, pat.region, b, junction);
        any = any || joined[static_cast<std::size_t>(i)];
      }
      if (!any) continue;
      // b's own junctions are never inside its region, so runs are proper paths.
      int start = 0;
      while (cycle[static_cast<std::size_t>(start)] != b) ++start;
      std::vector<int> run;
      auto flush = [&] {
        // A run whose heights all sit on one side of b cannot contain both a
        // bend forced below b and one forced above it.
        int lo = -1, hi = -1;
        for (std::size_t i = 0; i < run.size(); ++i) {
          const auto u = static_cast<std::size_t>(run[i]);
          if (below[u][static_cast<std::size_t>(b)] && lo < 0) lo = static_cast<int>(i);
          if (below[static_cast<std::size_t>(b)][u] && hi < 0) hi = static_cast<int>(i);
        }
        if (lo >= 0 && hi >= 0) {
          ConfigurationMatch m;
          m.type = pat.type;
          m.bend = b;
          if (pat.region == RegionKind::LeftOfVertical) {
            const auto v = vertical_arm(g, b);
            m.region = {0, v.from.col, std::min(v.from.row, v.to.row), std::max(v.from.row, v.to.row)};
          } else {
            const auto h = horizontal_arm(g, b);
            m.region = {std::min(h.from.col, h.to.col), std::max(h.from.col, h.to.col), h.from.row, n - 1};
          }
          const auto [first, last] = std::minmax(lo, hi);
          m.path.assign(run.begin() + first, run.begin() + last + 1);
          out.push_back(std::move(m));
        }
        run.clear();
      };
      for (int step = 1; step <= n; ++step) {
        const int i = (start + step) % n;
        const int u = cycle[static_cast<std::size_t>(i)];
        if (u == b) {
          flush();
          continue;
        }
        if (run.empty()) run.push_back(u);
        else if (joined[static_cast<std::size_t>((i + n - 1) % n)]) run.push_back(u);
        else {
          flush();
          run.push_back(u);
        }
      }
      flush();
    }
  }
  return out;
}

namespace {

constexpr int kCyclicPenalty = 1 << 20;
constexpr std::uint64_t kViolationNodeBudget = 200000;
constexpr int kMaxStabilizedSize = 64;

// Smallest number of violated side constraints over all heights that respect
// the crossing order, found by branch and bound (upper bound once the node
// budget runs out). A cyclic order scores kCyclicPenalty.
class ViolationScore {
 public:
  explicit ViolationScore(const GridDiagram& g) {
    if (!partial_order(g).acyclic) {
      best_ = kCyclicPenalty;
      return;
    }
    const auto cons = lift_constraints(g);
    n_ = cons.n;
    above_.assign(static_cast<std::size_t>(n_), 0);
    for (const auto& [over, under] : cons.order) above_[static_cast<std::size_t>(under)] |= std::uint64_t{1} << over;
    sides_.resize(static_cast<std::size_t>(n_));
    for (const auto& c : cons.sides)
      sides_[static_cast<std::size_t>(c.bend)].push_back((std::uint64_t{1} << c.a) | (std::uint64_t{1} << c.t));
    best_ = static_cast<int>(cons.sides.size()) + 1;
    recurse(0, 0, n_);
  }
  int value() const { return best_; }

 private:
  void recurse(std::uint64_t placed, int violated, int left) {
    if (violated >= best_ || ++nodes_ > kViolationNodeBudget) return;
    if (left == 0) {
      best_ = violated;
      return;
    }
    for (int u = 0; u < n_; ++u) {
      if ((placed >> u) & 1 || (above_[static_cast<std::size_t>(u)] & ~placed) != 0) continue;
      int v = 0;
      for (std::uint64_t pair : sides_[static_cast<std::size_t>(u)]) {
        const std::uint64_t hit = pair & placed;
        v += hit != 0 && hit != pair;
      }
      recurse(placed | (std::uint64_t{1} << u), violated + v, left - 1);
    }
  }

  int n_ = 0;
  std::vector<std::uint64_t> above_;
  std::vector<std::vector<std::uint64_t>> sides_;
  std::uint64_t nodes_ = 0;
  int best_ = 0;
};

struct Move {
  MarkKind marking;
  int row;
  Corner kind;
};

std::string describe(const Move& m) {
  return std::string(m.marking == MarkKind::X ? "X" : "O") + " row " + std::to_string(m.row) + " " + to_string(m.kind);
}

std::vector<Move> preserving_moves(const GridDiagram& g) {
  std::vector<Move> out;
  for (MarkKind mk : {MarkKind::X, MarkKind::O})
    for (Corner k : {Corner::NE, Corner::NW, Corner::SE, Corner::SW})
      if (is_legendrian_preserving(mk, k, Hand::Left))
        for (int r = 0; r < g.size(); ++r) out.push_back({mk, r, k});
  return out;
}

struct Step {
  std::vector<Move> moves;
  GridDiagram grid;
  int score;
};

// Best sequence of `depth` stabilizations by score; first found wins ties.
Step best_step(const GridDiagram& g, int depth) {
  Step best{{}, g, kCyclicPenalty + 1};
  std::vector<Move> path;
  std::function<void(const GridDiagram&, int)> go = [&](const GridDiagram& cur, int d) {
    for (const Move& m : preserving_moves(cur)) {
      const GridDiagram next = stabilize(cur, m.marking, m.row, m.kind);
      path.push_back(m);
      if (d == 1) {
        const int sc = ViolationScore(next).value();
        if (sc < best.score) best = {path, next, sc};
      } else {
        go(next, d - 1);
      }
      path.pop_back();
    }
  };
  go(g, depth);
  return best;
}

}  // namespace

StabilizedLift lift_with_stabilizations(const GridDiagram& g) {
  require_knot(g, "lift_with_stabilizations");
  StabilizedLift out{{}, g, {}};
  int score = ViolationScore(g).value();
  while (true) {
    if (score == 0 || out.moves.empty()) {
      if (auto cube = find_lift(out.grid)) {
        out.cube = std::move(*cube);
        return out;
      }
    }
    if (out.grid.size() >= kMaxStabilizedSize - 2)
      throw std::logic_error("lift_with_stabilizations: size limit reached without a lift");
    Step step = best_step(out.grid, 1);
    if (step.score >= score) {
      Step two = best_step(out.grid, 2);
      // Accept a non-improving pair rather than stall; the size limit bounds the loop.
      if (two.score < score || step.score > two.score) step = std::move(two);
    }
    for (const Move& m : step.moves) out.moves.push_back(describe(m));
    out.grid = std::move(step.grid);
    score = step.score;
  }
}

}  // namespace cubeknot
