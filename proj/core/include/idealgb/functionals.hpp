#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "idealgb/counters.hpp"
#include "idealgb/order.hpp"
#include "idealgb/polynomial.hpp"

namespace idealgb {

using Point = std::vector<Rational>;

/// The functionals delta_theta o P(D) for P ranging over span(basis).
struct ConditionSpace {
  Point point;
  std::vector<Polynomial> basis;
};

/// A full set of interpolation conditions over named variables.
struct Problem {
  std::vector<std::string> variables;
  MonomialOrder order;
  std::vector<ConditionSpace> conditions;

  std::size_t nvars() const noexcept { return variables.size(); }
  /// Total number of functionals n.
  std::size_t functionalCount() const noexcept;
};

/// One functional delta_theta o P(D).
struct Functional {
  Point point;
  Polynomial poly;
};

/// Flattens every condition space into its basis functionals, in order.
std::vector<Functional> flatten(const Problem& problem);

/// Structural checks: dimensions agree, at least one functional, no empty
/// space, no zero basis polynomial. Throws Error.
void validate(const Problem& problem);

/// delta_theta o P(D) applied to the monomial t, i.e.
/// sum over beta <= t of P^(beta) * t!/(t-beta)! * theta^(t-beta).
Rational evalFunctional(const Point& theta, const Polynomial& P, const Monomial& t,
                        OpCounters* counters = nullptr);

/// Linear extension of evalFunctional to a polynomial f.
Rational evalOnPolynomial(const Point& theta, const Polynomial& P, const Polynomial& f,
                          OpCounters* counters = nullptr);

struct DInvarianceReport {
  bool invariant = true;
  /// First basis polynomial whose derivative leaves the span, with the variable.
  std::optional<std::size_t> basisIndex;
  std::optional<std::size_t> variable;
};

/// Whether span(space.basis) is closed under every partial derivative.
DInvarianceReport isDInvariant(const ConditionSpace& space);

/// Whether the functionals are linearly independent, decided by running the
/// quotient-basis search to completion and comparing its size with n.
bool areIndependent(const std::vector<Functional>& functionals);

/// Truncation of the series e^{theta X} P to the monomials in T:
/// sum over t in T of (evalFunctional(theta, P, t) / t!) * t.
/// The series itself is never formed.
Polynomial lambdaTruncate(const Point& theta, const Polynomial& P,
                          const std::vector<Monomial>& T, OpCounters* counters = nullptr);

}  // namespace idealgb
