#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include "cubeknot/knot_id.hpp"
#include "cubeknot/legendrian.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cubeknot;

namespace {

// Rotation set written out from its defining formula.
std::set<int> rotation_set(int p) {
  std::set<int> s;
  for (int t = 0; 2 * t < p - 2; ++t) {
    s.insert(p - 2 - 4 * t);
    s.insert(-(p - 2 - 4 * t));
  }
  return s;
}

}  // namespace

TEST_CASE("bracket strategies agree") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 60; ++i) {
    const auto g = oracle::random_knot(4 + i % 5, rng);
    if (crossings(g).size() > 16) continue;
    CHECK(kauffman_bracket_plain(g) == kauffman_bracket_memo(g));
  }
  CHECK(kauffman_bracket(GridDiagram({0, 1}, {1, 0})) == LaurentPoly::one());
  CHECK_THROWS_AS(kauffman_bracket(GridDiagram({0, 1, 2, 3}, {1, 0, 3, 2})), GridError);
}

TEST_CASE("jones agrees with the state-sum oracle") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& g : oracle::all_grids(n, true)) CHECK(jones(g) == oracle::jones(g));
  std::mt19937_64 rng(14);
  for (int i = 0; i < 40; ++i) {
    const auto g = oracle::random_knot(6 + i % 3, rng);
    if (crossings(g).size() > 14) continue;
    CHECK(jones(g) == oracle::jones(g));
  }
}

TEST_CASE("left trefoil") {
  const auto g = canonical_kmin_grid(3);
  const auto v = jones(g);
  const auto expected = LaurentPoly::monomial(-1, -8) + LaurentPoly::monomial(1, -6) + LaurentPoly::monomial(1, -2);
  CHECK(v == expected);
  CHECK(v == oracle::jones(g));
  CHECK(jones_t_string(v) == "-t^-4 + t^-3 + t^-1");
  CHECK(jones(mirror(g)) == v.scale_exponents(-1));
  CHECK(jones_from_bracket(kauffman_bracket(g), writhe(g)) == v);
}

TEST_CASE("canonical grids are the left (p,2) torus knot") {
  for (int p = 3; p <= 9; p += 2) {
    const auto lo = canonical_kmin_grid(p);
    const auto hi = canonical_kmax_grid(p);
    CHECK(lo.size() == p + 2);
    CHECK(hi.size() == p + 2);
    CHECK(component_count(lo) == 1);
    CHECK(component_count(hi) == 1);
    const auto ref = oracle::left_torus_jones(p);
    CHECK(jones(lo) == ref);
    CHECK(jones(hi) == ref);
  }
  CHECK_THROWS_AS(canonical_kmin_grid(4), GridError);
  CHECK_THROWS_AS(canonical_kmax_grid(1), GridError);
}

TEST_CASE("kmax cubes") {
  const auto start = std::chrono::steady_clock::now();
  for (int p : {3, 5, 7}) {
    const auto c = kmax_cube(p);
    CHECK(c.n == p + 2);
    CHECK(validate_cube(c).ok());
    const auto z = project(c, Axis::Z);
    const auto f = front_invariants(z, Hand::Left);
    CHECK(f.tb == -2 * p);
    CHECK(f.rot == p - 2);
    CHECK(jones(z) == jones(canonical_kmax_grid(p)));
  }
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(10));
}

TEST_CASE("maximal-tb classes") {
  for (int p = 3; p <= 11; p += 2) {
    const auto classes = legendrian_classes(p);
    std::set<int> rots;
    for (const auto& c : classes) {
      CHECK(c.p == p);
      CHECK(c.tb == -2 * p);
      rots.insert(c.rot);
    }
    CHECK(rots == rotation_set(p));
    CHECK(rots.size() == classes.size());
    CHECK(std::is_sorted(classes.begin(), classes.end(), [](const auto& a, const auto& b) { return a.rot > b.rot; }));
    for (const auto& g : {canonical_kmin_grid(p), canonical_kmax_grid(p)}) {
      const auto f = front_invariants(g, Hand::Left);
      CHECK(std::find(classes.begin(), classes.end(), LegendrianClassSpec{p, f.tb, f.rot}) != classes.end());
    }
  }
  CHECK(rotation_set(3) == std::set<int>{-1, 1});
  CHECK(rotation_set(5) == std::set<int>{-3, -1, 1, 3});
  CHECK_THROWS_AS(legendrian_classes(6), GridError);
}

TEST_CASE("jones is invariant under translation and stabilization") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 100; ++i) {
    const auto g = oracle::random_knot(3 + i % 4, rng);
    const auto v = jones(g);
    CHECK(jones(translate(g, static_cast<int>(rng() % 5), static_cast<int>(rng() % 5))) == v);
    CHECK(jones(rotate_180(g)) == v);
    const auto s = stabilize(g, (rng() % 2) ? MarkKind::X : MarkKind::O, static_cast<int>(rng() % static_cast<unsigned>(g.size())),
                             static_cast<Corner>(rng() % 4));
    CHECK(jones(s) == v);
  }
}
