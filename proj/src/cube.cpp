#include "cubeknot/cube.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cubeknot {

namespace {

constexpr const char* kProjectionName[3] = {"(y,z)", "(z,x)", "(x,y)"};
constexpr char kAxisChar[3] = {'x', 'y', 'z'};

int label_index(Label l) { return static_cast<int>(l); }
Label next_label(Label l) { return static_cast<Label>((label_index(l) + 1) % 3); }

int shared_coords(const Cell& a, const Cell& b) { return (a.i == b.i) + (a.j == b.j) + (a.k == b.k); }

int differing_axis(const Cell& a, const Cell& b) {
  for (int ax = 0; ax < 3; ++ax)
    if (a[ax] != b[ax]) return ax;
  return -1;
}

bool strictly_between(int v, int a, int b) { return (a < v && v < b) || (b < v && v < a); }

std::string cell_str(const Cell& c) {
  return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + "," + std::to_string(c.k) + ")";
}

// Flat-by-flat marking conditions; appends violations and returns whether all hold.
bool check_marking(const CubeDiagram& c, std::vector<std::string>& out) {
  const std::size_t before = out.size();
  const int n = c.n;
  int counts[3] = {0, 0, 0};
  std::set<Cell> cells;
  for (const auto& m : c.marks) {
    ++counts[label_index(m.label)];
    for (int ax = 0; ax < 3; ++ax)
      if (m.cell[ax] < 0 || m.cell[ax] >= n) out.push_back("mark " + cell_str(m.cell) + " out of range");
    if (!cells.insert(m.cell).second) out.push_back("two marks share cell " + cell_str(m.cell));
  }
  for (int l = 0; l < 3; ++l)
    if (counts[l] != n)
      out.push_back(std::string("expected ") + std::to_string(n) + " " + to_string(static_cast<Label>(l)) +
                    " marks, found " + std::to_string(counts[l]));
  if (out.size() != before) return false;

  for (int ax = 0; ax < 3; ++ax) {
    for (int level = 0; level < n; ++level) {
      const std::string flat = std::string(1, kAxisChar[ax]) + "-flat " + std::to_string(level);
      const Mark* by_label[3] = {nullptr, nullptr, nullptr};
      int in_flat = 0;
      for (const auto& m : c.marks) {
        if (m.cell[ax] != level) continue;
        ++in_flat;
        by_label[label_index(m.label)] = &m;
      }
      if (in_flat != 3 || !by_label[0] || !by_label[1] || !by_label[2]) {
        out.push_back(flat + ": needs exactly one X, one Y and one Z");
        continue;
      }
      // Right angle: some mark shares a line with each of the other two,
      // along different axes.
      int vertex = -1;
      for (int v = 0; v < 3; ++v) {
        const Cell& cv = by_label[v]->cell;
        const Cell& c1 = by_label[(v + 1) % 3]->cell;
        const Cell& c2 = by_label[(v + 2) % 3]->cell;
        if (shared_coords(cv, c1) == 2 && shared_coords(cv, c2) == 2 && differing_axis(cv, c1) != differing_axis(cv, c2))
          vertex = v;
      }
      if (vertex < 0) {
        out.push_back(flat + ": marks do not form an axis-parallel right angle");
      } else if (vertex != ax) {
        out.push_back(flat + ": right-angle vertex is " + to_string(static_cast<Label>(vertex)) + ", expected " +
                      to_string(static_cast<Label>(ax)));
      }
    }
  }
  return out.size() == before;
}

}  // namespace

const char* to_string(Label l) noexcept {
  switch (l) {
    case Label::X: return "X";
    case Label::Y: return "Y";
    case Label::Z: return "Z";
  }
  return "?";
}

const char* to_string(Axis a) noexcept {
  switch (a) {
    case Axis::X: return "x";
    case Axis::Y: return "y";
    case Axis::Z: return "z";
  }
  return "?";
}

Axis axis_from_string(std::string_view s) {
  if (s == "x" || s == "X") return Axis::X;
  if (s == "y" || s == "Y") return Axis::Y;
  if (s == "z" || s == "Z") return Axis::Z;
  throw GridError("unknown axis '" + std::string(s) + "'");
}

std::vector<CubeSegment> cube_segments(const CubeDiagram& c) {
  std::vector<CubeSegment> segs;
  for (const auto& a : c.marks)
    for (const auto& b : c.marks)
      if (b.label == next_label(a.label) && shared_coords(a.cell, b.cell) == 2)
        segs.push_back({a.cell, b.cell, differing_axis(a.cell, b.cell)});
  return segs;
}

CubeReport validate_cube(const CubeDiagram& c) {
  CubeReport rep;
  if (c.n < 1) {
    rep.violations.push_back("cube size must be positive");
    rep.marking_ok = false;
    return rep;
  }
  rep.marking_ok = check_marking(c, rep.violations);
  if (!rep.marking_ok) {
    rep.crossing_ok = false;
    return rep;
  }
  const auto segs = cube_segments(c);
  if (static_cast<int>(segs.size()) != 3 * c.n) {
    rep.violations.push_back("marks do not close up into 3n segments");
    rep.crossing_ok = false;
    return rep;
  }
  // Projection along axis k: horizontal axis k+1, vertical axis k+2. The
  // vertical segment must be over, i.e. have the larger k coordinate.
  for (int k = 0; k < 3; ++k) {
    const int h_ax = (k + 1) % 3, v_ax = (k + 2) % 3;
    for (const auto& v : segs) {
      if (v.axis != v_ax) continue;
      for (const auto& h : segs) {
        if (h.axis != h_ax) continue;
        const int col = v.from[h_ax], row = h.from[v_ax];
        if (!strictly_between(col, h.from[h_ax], h.to[h_ax]) || !strictly_between(row, v.from[v_ax], v.to[v_ax]))
          continue;
        if (v.from[k] <= h.from[k]) {
          rep.crossing_ok = false;
          rep.violations.push_back(std::string("projection ") + kProjectionName[k] + ": " + kAxisChar[v_ax] +
                                   "-parallel segment " + cell_str(v.from) + "->" + cell_str(v.to) +
                                   " does not cross over " + kAxisChar[h_ax] + "-parallel segment " +
                                   cell_str(h.from) + "->" + cell_str(h.to));
        }
      }
    }
  }
  return rep;
}

GridDiagram project(const CubeDiagram& c, Axis axis) {
  std::vector<std::string> v;
  if (c.n < 1 || !check_marking(c, v)) throw GridError("project: marking conditions fail");
  const int a = static_cast<int>(axis);
  const int col_ax = (a + 1) % 3, row_ax = (a + 2) % 3;
  const Label x_label = static_cast<Label>(a);
  const Label o_label = static_cast<Label>((a + 1) % 3);
  std::vector<int> x(static_cast<std::size_t>(c.n)), o(static_cast<std::size_t>(c.n));
  for (const auto& m : c.marks) {
    if (m.label == x_label) x[static_cast<std::size_t>(m.cell[row_ax])] = m.cell[col_ax];
    if (m.label == o_label) o[static_cast<std::size_t>(m.cell[row_ax])] = m.cell[col_ax];
  }
  return {std::move(x), std::move(o)};
}

std::vector<CubeBend> cube_bends(const CubeDiagram& c, Axis axis) {
  const int a = static_cast<int>(axis);
  const auto segs = cube_segments(c);
  std::vector<CubeBend> bends;
  for (int level = 0; level < c.n; ++level) {
    for (const auto& m : c.marks) {
      if (m.label != static_cast<Label>(a) || m.cell[a] != level) continue;
      CubeBend b{axis, m.cell, {}, {}};
      for (const auto& s : segs) {
        if (s.to == m.cell) b.incoming = s;
        if (s.from == m.cell) b.outgoing = s;
      }
      bends.push_back(b);
    }
  }
  return bends;
}

CubeDiagram parse_cube(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  CubeDiagram c;
  bool have_header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    std::string extra;
    if (!have_header) {
      long n = 0;
      if (tag != "cube" || !(ls >> n) || n < 1 || n > 1024 || (ls >> extra))
        throw CubeParseError("line " + std::to_string(lineno) + ": malformed header, expected 'cube <n>'");
      c.n = static_cast<int>(n);
      have_header = true;
      continue;
    }
    Label label;
    if (tag == "X") label = Label::X;
    else if (tag == "Y") label = Label::Y;
    else if (tag == "Z") label = Label::Z;
    else throw CubeParseError("line " + std::to_string(lineno) + ": unknown label '" + tag + "'");
    Cell cell;
    if (!(ls >> cell.i >> cell.j >> cell.k) || (ls >> extra))
      throw CubeParseError("line " + std::to_string(lineno) + ": malformed mark, expected '<label> <i> <j> <k>'");
    for (int ax = 0; ax < 3; ++ax)
      if (cell[ax] < 0 || cell[ax] >= c.n)
        throw CubeParseError("line " + std::to_string(lineno) + ": cell out of range");
    c.marks.push_back({label, cell});
  }
  if (!have_header) throw CubeParseError("missing 'cube <n>' header");
  std::set<Cell> cells;
  int counts[3] = {0, 0, 0};
  for (const auto& m : c.marks) {
    if (!cells.insert(m.cell).second) throw CubeParseError("duplicate cell " + cell_str(m.cell));
    ++counts[label_index(m.label)];
  }
  for (int l = 0; l < 3; ++l)
    if (counts[l] != c.n)
      throw CubeParseError(std::string("expected ") + std::to_string(c.n) + " " + to_string(static_cast<Label>(l)) +
                           " marks, found " + std::to_string(counts[l]));
  return c;
}

std::string serialize_cube(const CubeDiagram& c) {
  auto marks = c.marks;
  std::sort(marks.begin(), marks.end());
  std::string s = "cube " + std::to_string(c.n) + "\n";
  for (const auto& m : marks)
    s += std::string(to_string(m.label)) + " " + std::to_string(m.cell.i) + " " + std::to_string(m.cell.j) + " " +
         std::to_string(m.cell.k) + "\n";
  return s;
}

bool same_marks(const CubeDiagram& a, const CubeDiagram& b) {
  if (a.n != b.n) return false;
  auto x = a.marks, y = b.marks;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

}  // namespace cubeknot
