#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace cubeknot {

/// Integer Laurent polynomial in one variable. Zero coefficients are never
/// stored, so equality is structural.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(std::int64_t coeff, int exponent);
  static LaurentPoly one() { return monomial(1, 0); }

  std::int64_t coeff(int exponent) const;
  const std::map<int, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(std::int64_t coeff, int exponent);
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }

  /// Substitutes x -> x^k (k may be negative).
  LaurentPoly scale_exponents(int k) const;
  /// Divides every exponent by k; throws if one is not divisible.
  LaurentPoly divide_exponents(int k) const;

  /// `c0*q^e0 + c1*q^e1 + ...`, ascending exponents; "0" for the zero polynomial.
  std::string to_string(std::string_view var = "q") const;
  static LaurentPoly parse(std::string_view text, std::string_view var = "q");

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::map<int, std::int64_t> terms_;
};

}  // namespace cubeknot
