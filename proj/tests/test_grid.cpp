#include <random>

#include "cubeknot/grid.hpp"
#include "cubeknot/knot_id.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cubeknot;

namespace {
const GridDiagram kUnknot2({0, 1}, {1, 0});
}

TEST_CASE("validate_grid reports each broken invariant") {
  CHECK(validate_grid(kUnknot2).ok());

  auto dup = validate_grid(GridDiagram({0, 0}, {1, 0}));
  REQUIRE_FALSE(dup.ok());
  CHECK(dup.violations.front() == "xcol not a permutation");

  auto shared = validate_grid(GridDiagram({0, 1, 2}, {0, 2, 1}));
  REQUIRE_FALSE(shared.ok());
  CHECK(shared.violations.front() == "X and O share cell in row 0");

  CHECK_FALSE(validate_grid(GridDiagram({0}, {0})).ok());
  CHECK_FALSE(validate_grid(GridDiagram({0, 1}, {1})).ok());
}

TEST_CASE("trace partitions the markings") {
  auto comps = trace(kUnknot2);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].size() == 4);

  CHECK(component_count(GridDiagram({0, 1, 2, 3}, {1, 0, 3, 2})) == 2);
  CHECK(component_count(canonical_kmin_grid(5)) == 1);

  for (int n = 2; n <= 4; ++n)
    for (const auto& g : oracle::all_grids(n, false)) {
      std::size_t total = 0;
      for (const auto& c : trace(g)) {
        total += c.size();
        for (std::size_t i = 0; i < c.size(); ++i) {
          const auto& a = c[i];
          const auto& b = c[(i + 1) % c.size()];
          CHECK(a.kind != b.kind);
          // X -> O runs along a column, O -> X along a row.
          if (a.kind == MarkKind::X) CHECK(a.pos.col == b.pos.col);
          else CHECK(a.pos.row == b.pos.row);
        }
      }
      CHECK(total == static_cast<std::size_t>(2 * n));
      CHECK(component_count(rotate_180(g)) == component_count(g));
    }
}

TEST_CASE("crossings and writhe agree with the geometric oracle") {
  CHECK(crossings(kUnknot2).empty());
  CHECK(writhe(kUnknot2) == 0);
  CHECK_THROWS_AS(writhe(GridDiagram({0, 1, 2, 3}, {1, 0, 3, 2})), GridError);

  const auto kmax = canonical_kmax_grid(5);
  int sum = 0;
  for (const auto& c : crossings(kmax)) {
    sum += c.sign;
    CHECK(vertical_arm(kmax, c.over_bend).vertical());
    CHECK_FALSE(horizontal_arm(kmax, c.under_bend).vertical());
  }
  CHECK(sum == writhe(kmax));

  const int w = writhe(canonical_kmin_grid(5));
  CHECK(-7 <= w);
  CHECK(w < -3);

  for (int n = 2; n <= 5; ++n)
    for (const auto& g : oracle::all_grids(n, true)) {
      const auto d = oracle::diagram(g);
      CHECK(crossings(g).size() == d.crossings.size());
      CHECK(writhe(g) == d.writhe);
      CHECK(crossings(rotate_180(g)).size() == crossings(g).size());
      CHECK(writhe(mirror(g)) == -writhe(g));
    }
}

TEST_CASE("corner census") {
  const auto cc = corner_census(kUnknot2);
  CHECK(cc.x_total() == 2);
  CHECK(cc.o_total() == 2);
  CHECK(cc.x_ne + cc.x_nw == 1);  // one X opens downward, one upward
  CHECK(cc.x_se + cc.x_sw == 1);

  // NE: segments leave west and south.
  const GridDiagram g({1, 0}, {0, 1});
  CHECK(corner_at(g, MarkKind::X, 1) == Corner::NW);
  CHECK(corner_at(g, MarkKind::X, 0) == Corner::SE);
  CHECK(corner_at(g, MarkKind::O, 1) == Corner::NE);
  CHECK(corner_at(g, MarkKind::O, 0) == Corner::SW);

  for (const auto& h : oracle::all_grids(4, false)) {
    const auto c = corner_census(h);
    CHECK(c.x_total() == 4);
    CHECK(c.o_total() == 4);
  }
}

TEST_CASE("point_below is a partial order") {
  CHECK(point_below({0, 0}, {3, 5}));
  CHECK_FALSE(point_below({2, 1}, {1, 4}));
  CHECK_FALSE(point_below({1, 4}, {2, 1}));
  CHECK(point_below({2, 2}, {2, 2}));

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(0, 4);
  for (int i = 0; i < 2000; ++i) {
    const Point a{d(rng), d(rng)}, b{d(rng), d(rng)}, c{d(rng), d(rng)};
    if (point_below(a, b) && point_below(b, a)) CHECK(a == b);
    if (point_below(a, b) && point_below(b, c)) CHECK(point_below(a, c));
  }
}

TEST_CASE("grid text format") {
  const std::string text = "grid 2\nX 0 1\nO 1 0\n";
  CHECK(parse_grid(text) == kUnknot2);
  CHECK(serialize_grid(parse_grid(text)) == text);
  CHECK(parse_grid("# comment\ngrid 2\n# another\nX 0 1\nO 1 0\n") == kUnknot2);

  auto message = [](const std::string& t) {
    try {
      parse_grid(t);
    } catch (const GridParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("grid 2\nX 0 0\nO 1 0\n") == "X row not a permutation");
  CHECK(message("grid 3\nX 0 1 2\nO 0 2 1\n") == "X and O share cell in row 0");
  CHECK(message("grod 2\nX 0 1\nO 1 0\n").find("malformed header") == 0);

  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    const auto g = oracle::random_knot(2 + i % 8, rng);
    CHECK(parse_grid(serialize_grid(g)) == g);
  }
}

TEST_CASE("symmetries preserve validity and component count") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const auto g = oracle::random_knot(3 + i % 5, rng);
    for (const auto& h : {rotate_180(g), mirror(g), swap_markings(g), translate(g, 1, 2), translate(g, -3, 1)}) {
      CHECK(is_valid_grid(h));
      CHECK(component_count(h) == 1);
    }
    CHECK(rotate_180(rotate_180(g)) == g);
    CHECK(mirror(mirror(g)) == g);
    CHECK(translate(translate(g, 2, 3), -2, -3) == g);
  }
}
