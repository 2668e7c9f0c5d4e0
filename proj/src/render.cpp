#include "cubeknot/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace cubeknot {

namespace {

constexpr int kCell = 24;

std::vector<std::string> ascii_rows(const GridDiagram& g) {
  const int n = g.size();
  std::vector<std::string> cells(static_cast<std::size_t>(n), std::string(static_cast<std::size_t>(n), '.'));
  auto at = [&](int col, int row) -> char& {
    return cells[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
  };
  for (int r = 0; r < n; ++r) {
    const auto [lo, hi] = std::minmax(g.x_col(r), g.o_col(r));
    for (int c = lo + 1; c < hi; ++c) at(c, r) = '-';
  }
  for (int c = 0; c < n; ++c) {
    const auto [lo, hi] = std::minmax(g.x_row(c), g.o_row(c));
    for (int r = lo + 1; r < hi; ++r) at(c, r) = at(c, r) == '-' ? '+' : '|';
  }
  for (int r = 0; r < n; ++r) {
    at(g.x_col(r), r) = 'X';
    at(g.o_col(r), r) = 'O';
  }
  std::reverse(cells.begin(), cells.end());
  return cells;
}

void svg_grid(std::ostringstream& s, const GridDiagram& g, int ox, int oy, const char* title) {
  const int n = g.size();
  const int side = n * kCell;
  auto cx = [&](int col) { return ox + col * kCell + kCell / 2; };
  auto cy = [&](int row) { return oy + side - row * kCell - kCell / 2; };
  s << "<g>\n";
  if (title) s << "<text x=\"" << ox << "\" y=\"" << oy - 6 << "\" font-size=\"12\">" << title << "</text>\n";
  s << "<rect x=\"" << ox << "\" y=\"" << oy << "\" width=\"" << side << "\" height=\"" << side
    << "\" fill=\"none\" stroke=\"#bbb\"/>\n";
  for (int r = 0; r < n; ++r)
    s << "<line x1=\"" << cx(g.o_col(r)) << "\" y1=\"" << cy(r) << "\" x2=\"" << cx(g.x_col(r)) << "\" y2=\"" << cy(r)
      << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  // Verticals drawn last with a white halo so they read as passing over.
  for (int c = 0; c < n; ++c) {
    const int y1 = cy(g.x_row(c)), y2 = cy(g.o_row(c));
    s << "<line x1=\"" << cx(c) << "\" y1=\"" << y1 << "\" x2=\"" << cx(c) << "\" y2=\"" << y2
      << "\" stroke=\"white\" stroke-width=\"6\"/>\n";
    s << "<line x1=\"" << cx(c) << "\" y1=\"" << y1 << "\" x2=\"" << cx(c) << "\" y2=\"" << y2
      << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  for (int r = 0; r < n; ++r) {
    s << "<text x=\"" << cx(g.x_col(r)) - 4 << "\" y=\"" << cy(r) + 4 << "\" font-size=\"12\" fill=\"#c00\">X</text>\n";
    s << "<circle cx=\"" << cx(g.o_col(r)) << "\" cy=\"" << cy(r) << "\" r=\"5\" fill=\"white\" stroke=\"#00c\"/>\n";
  }
  s << "</g>\n";
}

}  // namespace

std::string render_grid_ascii(const GridDiagram& g) {
  if (!is_valid_grid(g)) throw GridError("render: invalid grid");
  std::string out;
  for (const auto& row : ascii_rows(g)) out += row + '\n';
  return out;
}

GridDiagram parse_ascii_grid(std::string_view art) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(art)};
  for (std::string line; std::getline(in, line);)
    if (line.find_first_of("XO") != std::string::npos) lines.push_back(line);
  const int n = static_cast<int>(lines.size());
  std::vector<int> x(static_cast<std::size_t>(n), -1), o(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const int row = n - 1 - i;
    const auto& line = lines[static_cast<std::size_t>(i)];
    for (std::size_t c = 0; c < line.size(); ++c) {
      int* slot = line[c] == 'X' ? &x[static_cast<std::size_t>(row)] : line[c] == 'O' ? &o[static_cast<std::size_t>(row)] : nullptr;
      if (!slot) continue;
      if (*slot >= 0) throw GridParseError("ascii grid: row " + std::to_string(row) + " has two marks of one kind");
      *slot = static_cast<int>(c);
    }
    if (x[static_cast<std::size_t>(row)] < 0 || o[static_cast<std::size_t>(row)] < 0)
      throw GridParseError("ascii grid: row " + std::to_string(row) + " lacks an X or an O");
  }
  GridDiagram g(std::move(x), std::move(o));
  const auto rep = validate_grid(g);
  if (!rep.ok()) throw GridParseError("ascii grid: " + rep.violations.front());
  return g;
}

std::string render_grid_svg(const GridDiagram& g) {
  if (!is_valid_grid(g)) throw GridError("render: invalid grid");
  const int side = g.size() * kCell;
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side + 20 << "\" height=\"" << side + 20 << "\">\n";
  svg_grid(s, g, 10, 10, nullptr);
  s << "</svg>\n";
  return s.str();
}

std::string render_cube_ascii(const CubeDiagram& c) {
  const Axis axes[3] = {Axis::Z, Axis::X, Axis::Y};
  const char* names[3] = {"(x,y)", "(y,z)", "(z,x)"};
  std::vector<std::vector<std::string>> panels;
  for (Axis a : axes) panels.push_back(ascii_rows(project(c, a)));
  std::ostringstream s;
  const int n = c.n;
  for (int p = 0; p < 3; ++p) s << names[p] << std::string(static_cast<std::size_t>(std::max(0, n + 3 - 5)), ' ');
  s << '\n';
  for (int r = 0; r < n; ++r) {
    for (int p = 0; p < 3; ++p) s << panels[static_cast<std::size_t>(p)][static_cast<std::size_t>(r)] << "   ";
    s << '\n';
  }
  s << '\n' << serialize_cube(c);
  return s.str();
}

std::string render_cube_svg(const CubeDiagram& c) {
  const int side = c.n * kCell;
  const Axis axes[3] = {Axis::Z, Axis::X, Axis::Y};
  const char* names[3] = {"(x,y) projection", "(y,z) projection", "(z,x) projection"};
  std::ostringstream s;
  auto marks = c.marks;
  std::sort(marks.begin(), marks.end());
  const int list_h = static_cast<int>(marks.size()) * 14 + 20;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 3 * (side + 30) + 10 << "\" height=\""
    << side + 40 + list_h << "\">\n";
  for (int p = 0; p < 3; ++p) svg_grid(s, project(c, axes[p]), 10 + p * (side + 30), 25, names[p]);
  int y = side + 50;
  for (const auto& m : marks) {
    s << "<text x=\"10\" y=\"" << y << "\" font-size=\"12\" font-family=\"monospace\">" << to_string(m.label) << " "
      << m.cell.i << " " << m.cell.j << " " << m.cell.k << "</text>\n";
    y += 14;
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace cubeknot
