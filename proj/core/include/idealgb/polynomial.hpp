#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "idealgb/monomial.hpp"
#include "idealgb/order.hpp"
#include "idealgb/rational.hpp"

namespace idealgb {

using Term = std::pair<Monomial, Rational>;

/// Sparse multivariate polynomial with exact rational coefficients.
/// Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial monomial(const Monomial& m, const Rational& c = 1);
  static Polynomial fromTerms(std::size_t nvars, const std::vector<Term>& terms);

  std::size_t nvars() const noexcept { return nvars_; }
  bool isZero() const noexcept { return terms_.empty(); }
  std::size_t termCount() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }

  /// Coefficient of `m` (zero when absent); the P-hat(alpha) of the series view.
  Rational coefficient(const Monomial& m) const;

  /// Adds c * m in place.
  void addTerm(const Monomial& m, const Rational& c);

  /// The monomial support, ascending under `order`.
  std::vector<Monomial> support(const MonomialOrder& order) const;
  /// Terms ascending under `order`.
  std::vector<Term> sortedTerms(const MonomialOrder& order) const;

  /// Highest exponent of x_var in any term; 0 for the zero polynomial.
  Monomial::Exponent degreeIn(std::size_t var) const;
  /// True if every term involves only x_var (constants included).
  bool isUnivariateIn(std::size_t var) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Monomial& m);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void requireSameDimension(std::size_t nvars) const;

  std::size_t nvars_ = 0;
  TermMap terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Rational& c, const Polynomial& p);
Polynomial mul(const Polynomial& p, const Polynomial& q);
/// Partial derivative with respect to x_var.
Polynomial derivative(const Polynomial& p, std::size_t var);

/// The least monomial of p under `order` (the "lm" of the team
/// construction). Throws Error on the zero polynomial.
Monomial lm(const Polynomial& p, const MonomialOrder& order);

/// The greatest monomial of p under `order`, the conventional leading
/// monomial used by Groebner-basis verification.
Monomial leadingMonomial(const Polynomial& p, const MonomialOrder& order);
Rational leadingCoefficient(const Polynomial& p, const MonomialOrder& order);

/// Parses an expression over `vars`; see the grammar in README.md.
/// Throws ParseError (with column) on syntax errors and unknown variables.
Polynomial parsePolynomial(std::string_view text, const std::vector<std::string>& vars);

/// Terms in descending order of `order`, e.g. "x^2 - 7/3*x + 2/3*y".
std::string format(const Polynomial& p, const std::vector<std::string>& vars,
                   const MonomialOrder& order);
std::string format(const Monomial& m, const std::vector<std::string>& vars);

}  // namespace idealgb
