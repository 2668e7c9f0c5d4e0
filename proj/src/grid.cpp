#include "cubeknot/grid.hpp"

#include <algorithm>
#include <sstream>

namespace cubeknot {

namespace {

bool is_permutation_of_range(const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  std::vector<char> seen(v.size(), 0);
  for (int c : v) {
    if (c < 0 || c >= n || seen[static_cast<std::size_t>(c)]) return false;
    seen[static_cast<std::size_t>(c)] = 1;
  }
  return true;
}

std::vector<int> inverse(const std::vector<int>& v) {
  std::vector<int> inv(v.size());
  for (std::size_t r = 0; r < v.size(); ++r) inv[static_cast<std::size_t>(v[r])] = static_cast<int>(r);
  return inv;
}

int sgn(int v) { return (v > 0) - (v < 0); }

bool strictly_between(int v, int a, int b) { return (a < v && v < b) || (b < v && v < a); }

void require_valid(const GridDiagram& g) {
  if (!is_valid_grid(g)) throw GridError("invalid grid diagram");
}

}  // namespace

const char* to_string(Corner c) noexcept {
  switch (c) {
    case Corner::NE: return "NE";
    case Corner::NW: return "NW";
    case Corner::SE: return "SE";
    case Corner::SW: return "SW";
  }
  return "?";
}

Corner corner_from_string(std::string_view s) {
  if (s == "NE" || s == "ne") return Corner::NE;
  if (s == "NW" || s == "nw") return Corner::NW;
  if (s == "SE" || s == "se") return Corner::SE;
  if (s == "SW" || s == "sw") return Corner::SW;
  throw GridError("unknown corner kind '" + std::string(s) + "'");
}

GridDiagram::GridDiagram(std::vector<int> xcol, std::vector<int> ocol)
    : xcol_(std::move(xcol)), ocol_(std::move(ocol)) {
  if (xcol_.size() == ocol_.size() && is_permutation_of_range(xcol_) && is_permutation_of_range(ocol_)) {
    xrow_ = inverse(xcol_);
    orow_ = inverse(ocol_);
  }
}

GridReport validate_grid(const GridDiagram& g) {
  GridReport rep;
  const auto& xc = g.xcol();
  const auto& oc = g.ocol();
  if (xc.size() != oc.size()) {
    rep.violations.push_back("X and O rows have different lengths");
    return rep;
  }
  if (xc.empty()) {
    rep.violations.push_back("empty grid");
    return rep;
  }
  if (xc.size() == 1) rep.violations.push_back("grid of size 1 is degenerate");
  if (!is_permutation_of_range(xc)) rep.violations.push_back("xcol not a permutation");
  if (!is_permutation_of_range(oc)) rep.violations.push_back("ocol not a permutation");
  for (std::size_t r = 0; r < xc.size(); ++r) {
    if (xc[r] == oc[r] && xc.size() > 1)
      rep.violations.push_back("X and O share cell in row " + std::to_string(r));
  }
  return rep;
}

bool is_valid_grid(const GridDiagram& g) noexcept {
  const int n = g.size();
  if (n < 2 || static_cast<int>(g.ocol().size()) != n) return false;
  if (!is_permutation_of_range(g.xcol()) || !is_permutation_of_range(g.ocol())) return false;
  for (int r = 0; r < n; ++r)
    if (g.x_col(r) == g.o_col(r)) return false;
  return true;
}

std::vector<std::vector<Marking>> trace(const GridDiagram& g) {
  require_valid(g);
  const int n = g.size();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Marking>> comps;
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<Marking> comp;
    int r = start;
    while (!seen[static_cast<std::size_t>(r)]) {
      seen[static_cast<std::size_t>(r)] = 1;
      const int next = g.next_bend(r);
      comp.push_back({MarkKind::X, {g.x_col(r), r}});
      comp.push_back({MarkKind::O, {g.x_col(r), next}});
      r = next;
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

int component_count(const GridDiagram& g) {
  require_valid(g);
  const int n = g.size();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int comps = 0;
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++comps;
    for (int r = start; !seen[static_cast<std::size_t>(r)]; r = g.next_bend(r)) seen[static_cast<std::size_t>(r)] = 1;
  }
  return comps;
}

Segment vertical_arm(const GridDiagram& g, int bend) {
  const int c = g.x_col(bend);
  return {{c, bend}, {c, g.o_row(c)}};
}

Segment horizontal_arm(const GridDiagram& g, int bend) { return {{g.o_col(bend), bend}, {g.x_col(bend), bend}}; }

std::vector<Crossing> crossings(const GridDiagram& g) {
  require_valid(g);
  const int n = g.size();
  std::vector<Crossing> out;
  for (int b = 0; b < n; ++b) {
    const int c = g.x_col(b);
    const int r_end = g.o_row(c);
    for (int s = 0; s < n; ++s) {
      if (!strictly_between(s, b, r_end) || !strictly_between(c, g.o_col(s), g.x_col(s))) continue;
      // sign = z-component of (over direction x under direction)
      const int sign = -sgn(r_end - b) * sgn(g.x_col(s) - g.o_col(s));
      out.push_back({{c, s}, b, s, sign});
    }
  }
  return out;
}

int writhe(const GridDiagram& g) {
  if (component_count(g) != 1) throw GridError("writhe is defined here for knots only");
  const int n = g.size();
  int w = 0;
  for (int b = 0; b < n; ++b) {
    const int c = g.x_col(b);
    const int r_end = g.o_row(c);
    const int vdir = sgn(r_end - b);
    const int lo = std::min(b, r_end), hi = std::max(b, r_end);
    for (int s = lo + 1; s < hi; ++s)
      if (strictly_between(c, g.o_col(s), g.x_col(s))) w -= vdir * sgn(g.x_col(s) - g.o_col(s));
  }
  return w;
}

int CornerCensus::count(MarkKind m, Corner c) const noexcept {
  if (m == MarkKind::X) {
    switch (c) {
      case Corner::NE: return x_ne;
      case Corner::NW: return x_nw;
      case Corner::SE: return x_se;
      case Corner::SW: return x_sw;
    }
  }
  switch (c) {
    case Corner::NE: return o_ne;
    case Corner::NW: return o_nw;
    case Corner::SE: return o_se;
    case Corner::SW: return o_sw;
  }
  return 0;
}

Corner corner_at(const GridDiagram& g, MarkKind m, int row) {
  if (m == MarkKind::X) {
    const int c = g.x_col(row);
    return corner_from_directions(sgn(g.o_row(c) - row), sgn(g.o_col(row) - c));
  }
  const int c = g.o_col(row);
  return corner_from_directions(sgn(g.x_row(c) - row), sgn(g.x_col(row) - c));
}

CornerCensus corner_census(const GridDiagram& g) {
  require_valid(g);
  CornerCensus cc;
  for (int r = 0; r < g.size(); ++r) {
    switch (corner_at(g, MarkKind::X, r)) {
      case Corner::NE: ++cc.x_ne; break;
      case Corner::NW: ++cc.x_nw; break;
      case Corner::SE: ++cc.x_se; break;
      case Corner::SW: ++cc.x_sw; break;
    }
    switch (corner_at(g, MarkKind::O, r)) {
      case Corner::NE: ++cc.o_ne; break;
      case Corner::NW: ++cc.o_nw; break;
      case Corner::SE: ++cc.o_se; break;
      case Corner::SW: ++cc.o_sw; break;
    }
  }
  return cc;
}

GridDiagram rotate_180(const GridDiagram& g) {
  const int n = g.size();
  std::vector<int> x(static_cast<std::size_t>(n)), o(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    x[static_cast<std::size_t>(n - 1 - r)] = n - 1 - g.x_col(r);
    o[static_cast<std::size_t>(n - 1 - r)] = n - 1 - g.o_col(r);
  }
  return {std::move(x), std::move(o)};
}

GridDiagram mirror(const GridDiagram& g) {
  const int n = g.size();
  std::vector<int> x(static_cast<std::size_t>(n)), o(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    x[static_cast<std::size_t>(r)] = n - 1 - g.x_col(r);
    o[static_cast<std::size_t>(r)] = n - 1 - g.o_col(r);
  }
  return {std::move(x), std::move(o)};
}

GridDiagram swap_markings(const GridDiagram& g) { return {g.ocol(), g.xcol()}; }

GridDiagram translate(const GridDiagram& g, int dc, int dr) {
  const int n = g.size();
  auto wrap = [n](int v) { return ((v % n) + n) % n; };
  std::vector<int> x(static_cast<std::size_t>(n)), o(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    x[static_cast<std::size_t>(wrap(r + dr))] = wrap(g.x_col(r) + dc);
    o[static_cast<std::size_t>(wrap(r + dr))] = wrap(g.o_col(r) + dc);
  }
  return {std::move(x), std::move(o)};
}

GridDiagram parse_grid(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  if (lines.size() != 3) throw GridParseError("malformed grid file: expected header, X row and O row");

  std::istringstream header(lines[0]);
  std::string tag;
  long n = 0;
  if (!(header >> tag >> n) || tag != "grid" || n < 1 || n > 4096)
    throw GridParseError("malformed header: expected 'grid <n>'");
  std::string extra;
  if (header >> extra) throw GridParseError("malformed header: trailing tokens");

  auto read_row = [&](const std::string& l, const char* label) {
    std::istringstream ls(l);
    std::string t;
    if (!(ls >> t) || t != label) throw GridParseError(std::string("malformed ") + label + " row");
    std::vector<int> v;
    long c = 0;
    while (ls >> c) v.push_back(static_cast<int>(c));
    if (!ls.eof()) throw GridParseError(std::string("malformed ") + label + " row: non-integer token");
    if (static_cast<long>(v.size()) != n)
      throw GridParseError(std::string(label) + " row has wrong length");
    if (!is_permutation_of_range(v)) throw GridParseError(std::string(label) + " row not a permutation");
    return v;
  };
  auto x = read_row(lines[1], "X");
  auto o = read_row(lines[2], "O");
  if (n == 1) throw GridParseError("X and O share cell in row 0");
  for (std::size_t r = 0; r < x.size(); ++r)
    if (x[r] == o[r]) throw GridParseError("X and O share cell in row " + std::to_string(r));
  return {std::move(x), std::move(o)};
}

std::string serialize_grid(const GridDiagram& g) {
  std::string s = "grid " + std::to_string(g.size()) + "\nX";
  for (int c : g.xcol()) s += " " + std::to_string(c);
  s += "\nO";
  for (int c : g.ocol()) s += " " + std::to_string(c);
  s += "\n";
  return s;
}

}  // namespace cubeknot
