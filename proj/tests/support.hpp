#pragma once

#include <string>
#include <vector>

#include "idealgb/functionals.hpp"
#include "idealgb/order.hpp"
#include "idealgb/polynomial.hpp"

namespace idealgb::test {

inline const std::vector<std::string>& xy() {
  static const std::vector<std::string> vars{"x", "y"};
  return vars;
}

/// grlex / lex with y < x over the variables (x, y).
inline MonomialOrder grlexYX() { return MonomialOrder::grlex({0, 1}); }
inline MonomialOrder lexYX() { return MonomialOrder::lex({0, 1}); }

inline Polynomial P(const std::string& text, const std::vector<std::string>& vars = xy()) {
  return parsePolynomial(text, vars);
}

inline std::vector<Polynomial> Ps(const std::vector<std::string>& texts,
                                  const std::vector<std::string>& vars = xy()) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parsePolynomial(t, vars));
  return out;
}

inline Monomial M(const std::string& text, const std::vector<std::string>& vars = xy()) {
  const Polynomial p = parsePolynomial(text, vars);
  return p.terms().begin()->first;
}

inline std::vector<Monomial> Ms(const std::vector<std::string>& texts,
                                const std::vector<std::string>& vars = xy()) {
  std::vector<Monomial> out;
  for (const auto& t : texts) out.push_back(M(t, vars));
  return out;
}

inline Point pt(std::initializer_list<long> coords) {
  Point p;
  for (long c : coords) p.emplace_back(c);
  return p;
}

inline Problem example9() {
  const auto one = Ps({"1"});
  return Problem{xy(), grlexYX(), {{pt({0, 0}), one}, {pt({1, 2}), one}, {pt({2, 1}), one}}};
}

inline Problem example10() {
  return Problem{xy(), lexYX(),
                 {{pt({0, 0}), Ps({"1", "x", "1/2*x^2 + y"})}, {pt({1, 2}), Ps({"1", "x"})}}};
}

}  // namespace idealgb::test
