#include "idealgb/multi_point.hpp"

#include <set>
#include <stdexcept>

#include "idealgb/error.hpp"

namespace idealgb {

namespace {

struct EchelonRow {
  std::size_t pivot;
  std::vector<Rational> values;
  Polynomial combination;  // polynomial whose evaluation vector is `values`
};

}  // namespace

MmmResult mmmQuotient(const std::vector<Functional>& functionals, const MonomialOrder& order,
                      OpCounters* counters) {
  const std::size_t n = functionals.size();
  if (n == 0) throw Error("no functionals");
  const std::size_t d = order.nvars();

  MmmResult out;
  std::vector<EchelonRow> rows;
  std::set<Monomial, OrderLess> pool(OrderLess{&order});
  pool.insert(Monomial(d));

  while (!pool.empty()) {
    const Monomial t = *pool.begin();
    pool.erase(pool.begin());

    std::vector<Rational> v(n);
    for (std::size_t j = 0; j < n; ++j) {
      v[j] = evalFunctional(functionals[j].point, functionals[j].poly, t, &out.counters);
    }
    ++out.counters.rankDecisions;

    Polynomial combination = Polynomial::monomial(t);
    for (const auto& row : rows) {
      const Rational factor = v[row.pivot];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (row.values[j] != 0) {
          v[j] -= factor * row.values[j];
          ++out.counters.fieldOps;
        }
      }
      combination -= factor * row.combination;
      out.counters.fieldOps += row.combination.termCount();
    }

    std::size_t pivot = 0;
    while (pivot < n && v[pivot] == 0) ++pivot;
    if (pivot == n) {
      out.leadingMonomials.push_back(t);
      out.basis.push_back(std::move(combination));
      std::erase_if(pool, [&](const Monomial& c) { return t.divides(c); });
      continue;
    }

    const Rational inv = 1 / v[pivot];
    for (auto& x : v) {
      if (x != 0) {
        x *= inv;
        ++out.counters.fieldOps;
      }
    }
    combination *= inv;
    out.counters.fieldOps += combination.termCount();
    rows.push_back({pivot, std::move(v), std::move(combination)});
    out.quotientBasis.push_back(t);

    for (std::size_t i = 0; i < d; ++i) {
      Monomial c = t * Monomial::variable(d, i);
      bool reducible = false;
      for (const auto& g : out.leadingMonomials) {
        if (g.divides(c)) {
          reducible = true;
          break;
        }
      }
      if (!reducible) pool.insert(std::move(c));
    }
  }

  if (counters) *counters += out.counters;
  if (out.quotientBasis.size() < n) {
    throw DependentConditions("interpolation functionals are linearly dependent: quotient "
                              "dimension " + std::to_string(out.quotientBasis.size()) +
                              " < " + std::to_string(n));
  }
  return out;
}

GroebnerResult groebnerMmm(const Problem& problem, const SolveOptions& options) {
  validate(problem);
  if (options.checkDInvariance) {
    for (std::size_t k = 0; k < problem.conditions.size(); ++k) {
      requireDInvariant(problem.conditions[k], k);
    }
  }
  const auto functionals = flatten(problem);

  GroebnerResult result;
  MmmResult mmm = mmmQuotient(functionals, problem.order, &result.counters);
  result.quotientBasis = mmm.quotientBasis;
  result.leadingMonomials = mmm.leadingMonomials;
  result.basis = basisFromTruncations(functionals, result.quotientBasis,
                                      result.leadingMonomials, problem.order, result.counters);
  if (result.basis != mmm.basis) {
    throw std::logic_error("truncated-series basis disagrees with the MMM basis");
  }
  return result;
}

GroebnerResult groebnerMulti(const Problem& problem, const SolveOptions& options) {
  validate(problem);
  if (problem.conditions.size() == 1) {
    return groebnerSingle(problem.conditions.front(), problem.order, options);
  }
  return groebnerMmm(problem, options);
}

}  // namespace idealgb
