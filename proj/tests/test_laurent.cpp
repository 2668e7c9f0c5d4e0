#include <random>

#include "cubeknot/laurent.hpp"
#include "doctest.h"

using cubeknot::LaurentPoly;

TEST_CASE("laurent arithmetic") {
  const auto a = LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-1, 3);
  const auto b = LaurentPoly::monomial(1, 1) + LaurentPoly::one();
  const auto p = a * b;
  CHECK(p.coeff(0) == 2);
  CHECK(p.coeff(-1) == 2);
  CHECK(p.coeff(4) == -1);
  CHECK(p.coeff(3) == -1);
  CHECK(p.terms().size() == 4);

  auto z = a;
  z += LaurentPoly::monomial(-2, -1) + LaurentPoly::monomial(1, 3);
  CHECK(z.is_zero());
  CHECK(z.to_string() == "0");
  CHECK(LaurentPoly::monomial(0, 5).is_zero());
}

TEST_CASE("exponent substitutions") {
  const auto a = LaurentPoly::monomial(3, 2) + LaurentPoly::monomial(-1, -4);
  CHECK(a.scale_exponents(-1) == LaurentPoly::monomial(3, -2) + LaurentPoly::monomial(-1, 4));
  CHECK(a.divide_exponents(2) == LaurentPoly::monomial(3, 1) + LaurentPoly::monomial(-1, -2));
  CHECK_THROWS(a.divide_exponents(3));
}

TEST_CASE("canonical serialization round trips") {
  const auto a = LaurentPoly::monomial(-1, -8) + LaurentPoly::monomial(1, -6) + LaurentPoly::monomial(1, -2);
  CHECK(a.to_string() == "-1*q^-8 + 1*q^-6 + 1*q^-2");
  CHECK(LaurentPoly::parse(a.to_string()) == a);
  CHECK(LaurentPoly::parse("0").is_zero());

  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> e(-12, 12), c(-5, 5);
  for (int i = 0; i < 500; ++i) {
    LaurentPoly p;
    for (int k = 0; k < 6; ++k) p.add_term(c(rng), e(rng));
    CHECK(LaurentPoly::parse(p.to_string()) == p);
    CHECK(LaurentPoly::parse(p.to_string("t"), "t") == p);
  }
}
