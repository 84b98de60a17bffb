#include "idealgb/functionals.hpp"

#include "idealgb/elimination.hpp"
#include "idealgb/error.hpp"
#include "idealgb/multi_point.hpp"

namespace idealgb {

std::size_t Problem::functionalCount() const noexcept {
  std::size_t n = 0;
  for (const auto& c : conditions) n += c.basis.size();
  return n;
}

std::vector<Functional> flatten(const Problem& problem) {
  std::vector<Functional> out;
  out.reserve(problem.functionalCount());
  for (const auto& space : problem.conditions) {
    for (const auto& p : space.basis) out.push_back({space.point, p});
  }
  return out;
}

void validate(const Problem& problem) {
  const std::size_t d = problem.nvars();
  if (d == 0) throw Error("problem has no variables");
  if (problem.order.nvars() != d) throw DimensionMismatch("order does not match variable count");
  if (problem.conditions.empty()) throw Error("problem has no condition spaces");
  for (std::size_t k = 0; k < problem.conditions.size(); ++k) {
    const auto& space = problem.conditions[k];
    if (space.point.size() != d) {
      throw DimensionMismatch("point " + std::to_string(k) + " has " +
                              std::to_string(space.point.size()) + " coordinates, expected " +
                              std::to_string(d));
    }
    if (space.basis.empty()) throw Error("condition space " + std::to_string(k) + " is empty");
    for (const auto& p : space.basis) {
      if (p.nvars() != d) throw DimensionMismatch("basis polynomial dimension mismatch");
      if (p.isZero()) {
        throw DependentPolynomials("condition space " + std::to_string(k) +
                                   " contains the zero polynomial");
      }
    }
  }
}

Rational evalFunctional(const Point& theta, const Polynomial& P, const Monomial& t,
                        OpCounters* counters) {
  if (theta.size() != t.nvars() || P.nvars() != t.nvars()) {
    throw DimensionMismatch("functional and monomial dimensions differ");
  }
  if (counters) ++counters->functionalEvals;
  const Integer tFact = t.factorial();
  Rational sum = 0;
  for (const auto& [beta, coef] : P.terms()) {
    if (!beta.divides(t)) continue;
    const Monomial rest = t / beta;
    Rational term = coef * Rational(tFact / rest.factorial());
    for (std::size_t i = 0; i < rest.nvars() && term != 0; ++i) {
      if (rest[i] == 0) continue;
      Rational power;
      mpz_pow_ui(power.get_num_mpz_t(), theta[i].get_num_mpz_t(), rest[i]);
      mpz_pow_ui(power.get_den_mpz_t(), theta[i].get_den_mpz_t(), rest[i]);
      term *= power;
    }
    sum += term;
  }
  return sum;
}

Rational evalOnPolynomial(const Point& theta, const Polynomial& P, const Polynomial& f,
                          OpCounters* counters) {
  Rational sum = 0;
  for (const auto& [m, c] : f.terms()) sum += c * evalFunctional(theta, P, m, counters);
  return sum;
}

DInvarianceReport isDInvariant(const ConditionSpace& space) {
  DInvarianceReport report;
  if (space.basis.empty()) return report;
  const std::size_t d = space.basis.front().nvars();
  const auto order = MonomialOrder::natural(MonomialOrder::Kind::Grlex, d);
  const std::size_t baseRank = rank(space.basis, order);
  for (std::size_t i = 0; i < space.basis.size(); ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Polynomial dp = derivative(space.basis[i], j);
      if (dp.isZero()) continue;
      auto extended = space.basis;
      extended.push_back(std::move(dp));
      if (rank(extended, order) > baseRank) {
        report.invariant = false;
        report.basisIndex = i;
        report.variable = j;
        return report;
      }
    }
  }
  return report;
}

bool areIndependent(const std::vector<Functional>& functionals) {
  if (functionals.empty()) return true;
  const std::size_t d = functionals.front().poly.nvars();
  try {
    mmmQuotient(functionals, MonomialOrder::natural(MonomialOrder::Kind::Grlex, d));
  } catch (const DependentConditions&) {
    return false;
  }
  return true;
}

Polynomial lambdaTruncate(const Point& theta, const Polynomial& P,
                          const std::vector<Monomial>& T, OpCounters* counters) {
  Polynomial q(P.nvars());
  for (const auto& t : T) {
    const Rational value = evalFunctional(theta, P, t, counters);
    if (counters) ++counters->truncationEvals;
    q.addTerm(t, value / Rational(t.factorial()));
  }
  return q;
}

}  // namespace idealgb
