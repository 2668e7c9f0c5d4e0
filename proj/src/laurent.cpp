#include "cubeknot/laurent.hpp"

#include <cctype>
#include <stdexcept>

namespace cubeknot {

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, int exponent) {
  LaurentPoly p;
  p.add_term(coeff, exponent);
  return p;
}

std::int64_t LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(std::int64_t coeff, int exponent) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(c, e);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(c1 * c2, e1 + e2);
  *this = std::move(r);
  return *this;
}

LaurentPoly LaurentPoly::scale_exponents(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.add_term(c, e * k);
  return r;
}

LaurentPoly LaurentPoly::divide_exponents(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) {
    if (e % k != 0) throw std::domain_error("exponent not divisible");
    r.add_term(c, e / k);
  }
  return r;
}

std::string LaurentPoly::to_string(std::string_view var) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += std::to_string(c) + "*" + std::string(var) + "^" + std::to_string(e);
  }
  return s;
}

LaurentPoly LaurentPoly::parse(std::string_view text, std::string_view var) {
  LaurentPoly p;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&]() -> long long {
    skip_ws();
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      throw std::invalid_argument("malformed polynomial: expected integer");
    return std::stoll(std::string(text.substr(start, i - start)));
  };
  auto expect = [&](std::string_view tok) {
    skip_ws();
    if (text.substr(i, tok.size()) != tok) throw std::invalid_argument("malformed polynomial: expected " + std::string(tok));
    i += tok.size();
  };
  skip_ws();
  if (text.substr(i) == "0") return p;
  while (true) {
    const auto c = read_int();
    expect("*");
    expect(var);
    expect("^");
    const auto e = read_int();
    p.add_term(c, static_cast<int>(e));
    skip_ws();
    if (i >= text.size()) break;
    expect("+");
  }
  return p;
}

}  // namespace cubeknot
