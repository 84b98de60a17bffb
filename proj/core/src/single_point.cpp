#include "idealgb/single_point.hpp"

#include <algorithm>
#include <set>

#include "idealgb/error.hpp"

namespace idealgb {

std::vector<Monomial> quotientBasisSingle(const Team& team) {
  std::vector<Monomial> q;
  q.reserve(team.polys.size());
  for (const auto& p : team.polys) q.push_back(lm(p, team.order));
  sortAscending(q, team.order);
  return q;
}

std::vector<Monomial> borderLeadingMonomials(const std::vector<Monomial>& quotient,
                                             std::size_t nvars, const MonomialOrder& order) {
  const std::set<Monomial> inQuotient(quotient.begin(), quotient.end());
  std::set<Monomial, OrderLess> candidates(OrderLess{&order});
  for (const auto& q : quotient) {
    for (std::size_t i = 0; i < nvars; ++i) {
      Monomial c = q * Monomial::variable(nvars, i);
      if (!inQuotient.contains(c)) candidates.insert(std::move(c));
    }
  }
  std::vector<Monomial> generators;
  while (!candidates.empty()) {
    const Monomial least = *candidates.begin();
    generators.push_back(least);
    std::erase_if(candidates, [&](const Monomial& c) { return least.divides(c); });
  }
  return generators;
}

std::vector<Polynomial> basisFromTruncations(const std::vector<Functional>& functionals,
                                             const std::vector<Monomial>& quotient,
                                             const std::vector<Monomial>& leading,
                                             const MonomialOrder& order, OpCounters& counters) {
  std::vector<Monomial> support = quotient;
  support.insert(support.end(), leading.begin(), leading.end());
  sortAscending(support, order);

  std::vector<Polynomial> truncated;
  truncated.reserve(functionals.size());
  for (const auto& f : functionals) {
    truncated.push_back(lambdaTruncate(f.point, f.poly, support, &counters));
  }
  const Team reduced = reverseReducedTeam(truncated, order, &counters);

  std::vector<Monomial> least;
  std::vector<Rational> leastFactorial;
  for (const auto& q : reduced.polys) {
    least.push_back(lm(q, order));
    leastFactorial.emplace_back(least.back().factorial());
  }

  std::vector<Polynomial> basis;
  basis.reserve(leading.size());
  for (const auto& alpha : leading) {
    Polynomial g = Polynomial::monomial(alpha);
    const Rational alphaFactorial(alpha.factorial());
    for (std::size_t j = 0; j < reduced.polys.size(); ++j) {
      const Rational c = reduced.polys[j].coefficient(alpha);
      if (c == 0) continue;
      g.addTerm(least[j], -(alphaFactorial / leastFactorial[j]) * c);
    }
    basis.push_back(std::move(g));
  }
  return basis;
}

void requireDInvariant(const ConditionSpace& space, std::size_t spaceIndex) {
  const auto report = isDInvariant(space);
  if (report.invariant) return;
  throw NotDInvariant("condition space " + std::to_string(spaceIndex) +
                          " is not closed under differentiation: derivative of basis "
                          "polynomial " + std::to_string(*report.basisIndex) +
                          " with respect to variable " + std::to_string(*report.variable) +
                          " leaves the span",
                      *report.basisIndex, *report.variable);
}

GroebnerResult groebnerSingle(const ConditionSpace& space, const MonomialOrder& order,
                              const SolveOptions& options) {
  if (space.basis.empty()) throw Error("condition space is empty");
  if (space.point.size() != order.nvars()) throw DimensionMismatch("point dimension mismatch");
  if (options.checkDInvariance) requireDInvariant(space);

  GroebnerResult result;
  const Team team = reverseReducedTeam(space.basis, order, &result.counters);
  result.quotientBasis = quotientBasisSingle(team);
  result.leadingMonomials = borderLeadingMonomials(result.quotientBasis, order.nvars(), order);

  std::vector<Functional> functionals;
  functionals.reserve(team.polys.size());
  for (const auto& p : team.polys) functionals.push_back({space.point, p});
  result.basis = basisFromTruncations(functionals, result.quotientBasis,
                                      result.leadingMonomials, order, result.counters);
  return result;
}

}  // namespace idealgb
