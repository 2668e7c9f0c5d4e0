#pragma once

#include <string>
#include <string_view>

#include "cubeknot/cube.hpp"
#include "cubeknot/grid.hpp"

namespace cubeknot {

/// One character per cell, top row first: X, O, '|' and '-' for edges, '+'
/// where a vertical edge crosses a horizontal one, '.' for empty cells.
std::string render_grid_ascii(const GridDiagram& g);

/// Reads the X and O cells of render_grid_ascii output back into a grid.
/// Lines without any X or O are skipped. Throws GridParseError.
GridDiagram parse_ascii_grid(std::string_view art);

std::string render_grid_svg(const GridDiagram& g);

/// The three projections side by side, then the mark coordinates.
std::string render_cube_ascii(const CubeDiagram& c);
std::string render_cube_svg(const CubeDiagram& c);

}  // namespace cubeknot
