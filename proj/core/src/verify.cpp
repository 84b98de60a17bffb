#include "idealgb/verify.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "idealgb/error.hpp"

namespace idealgb {

namespace {

struct Divisor {
  Monomial lead;
  Rational leadCoefficient;
  const Polynomial* poly;
};

std::vector<Divisor> sortedDivisors(const std::vector<Polynomial>& basis,
                                    const MonomialOrder& order) {
  std::vector<Divisor> out;
  for (const auto& g : basis) {
    if (g.isZero()) throw Error("zero polynomial in division basis");
    const Monomial lead = leadingMonomial(g, order);
    out.push_back({lead, g.coefficient(lead), &g});
  }
  std::stable_sort(out.begin(), out.end(), [&](const Divisor& a, const Divisor& b) {
    return order.less(a.lead, b.lead);
  });
  return out;
}

}  // namespace

Polynomial normalForm(const Polynomial& f, const std::vector<Polynomial>& basis,
                      const MonomialOrder& order) {
  const auto divisors = sortedDivisors(basis, order);
  Polynomial rest = f;
  Polynomial remainder(f.nvars());
  while (!rest.isZero()) {
    const Monomial lead = leadingMonomial(rest, order);
    const Rational coef = rest.coefficient(lead);
    auto it = std::find_if(divisors.begin(), divisors.end(),
                           [&](const Divisor& d) { return d.lead.divides(lead); });
    if (it == divisors.end()) {
      remainder.addTerm(lead, coef);
      rest.addTerm(lead, -coef);
    } else {
      rest -= (*it->poly * (lead / it->lead)) * (coef / it->leadCoefficient);
    }
  }
  return remainder;
}

Polynomial sPolynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  const Monomial lf = leadingMonomial(f, order);
  const Monomial lg = leadingMonomial(g, order);
  const Monomial l = lf.lcm(lg);
  return (f * (l / lf)) * (1 / f.coefficient(lf)) - (g * (l / lg)) * (1 / g.coefficient(lg));
}

std::optional<std::vector<Monomial>> staircase(const std::vector<Monomial>& leading,
                                               std::size_t nvars, const MonomialOrder& order) {
  for (std::size_t v = 0; v < nvars; ++v) {
    const bool hasPurePower = std::any_of(leading.begin(), leading.end(), [&](const Monomial& m) {
      for (std::size_t i = 0; i < nvars; ++i) {
        if (i != v && m[i] != 0) return false;
      }
      return true;
    });
    if (!hasPurePower) return std::nullopt;
  }
  auto inIdeal = [&](const Monomial& m) {
    return std::any_of(leading.begin(), leading.end(),
                       [&](const Monomial& g) { return g.divides(m); });
  };
  std::set<Monomial> seen;
  std::deque<Monomial> frontier;
  if (!inIdeal(Monomial(nvars))) {
    seen.insert(Monomial(nvars));
    frontier.push_back(Monomial(nvars));
  }
  while (!frontier.empty()) {
    const Monomial m = frontier.front();
    frontier.pop_front();
    for (std::size_t i = 0; i < nvars; ++i) {
      Monomial next = m * Monomial::variable(nvars, i);
      if (inIdeal(next) || seen.contains(next)) continue;
      seen.insert(next);
      frontier.push_back(std::move(next));
    }
  }
  std::vector<Monomial> out(seen.begin(), seen.end());
  sortAscending(out, order);
  return out;
}

std::optional<std::size_t> quotientDimension(const std::vector<Monomial>& leading,
                                             std::size_t nvars) {
  const auto stairs =
      staircase(leading, nvars, MonomialOrder::natural(MonomialOrder::Kind::Grlex, nvars));
  if (!stairs) return std::nullopt;
  return stairs->size();
}

Certificate certify(const std::vector<Polynomial>& basis, const Problem& problem) {
  const auto& order = problem.order;
  const auto& vars = problem.variables;
  const auto functionals = flatten(problem);
  Certificate cert;
  cert.expectedDimension = functionals.size();

  for (const auto& g : basis) {
    if (g.isZero() || g.nvars() != problem.nvars()) {
      cert.vanishingDetail = cert.reducedDetail = cert.buchbergerDetail = cert.dimensionDetail =
          "basis contains a zero or mis-dimensioned polynomial";
      return cert;
    }
  }

  cert.vanishingOk = true;
  for (std::size_t i = 0; i < basis.size() && cert.vanishingOk; ++i) {
    for (std::size_t k = 0; k < functionals.size(); ++k) {
      const Rational value = evalOnPolynomial(functionals[k].point, functionals[k].poly, basis[i]);
      if (value != 0) {
        cert.vanishingOk = false;
        cert.vanishingWitness = VanishingWitness{k, i, value};
        cert.vanishingDetail = "functional " + std::to_string(k) + " maps basis element " +
                               format(basis[i], vars, order) + " to " + to_string(value);
        break;
      }
    }
  }

  std::vector<Monomial> leads;
  for (const auto& g : basis) leads.push_back(leadingMonomial(g, order));

  cert.reducedOk = true;
  for (std::size_t i = 0; i < basis.size() && cert.reducedOk; ++i) {
    if (basis[i].coefficient(leads[i]) != 1) {
      cert.reducedOk = false;
      cert.reducedDetail = "leading coefficient of " + format(basis[i], vars, order) + " is not 1";
      break;
    }
    for (std::size_t j = 0; j < basis.size() && cert.reducedOk; ++j) {
      if (i == j) continue;
      for (const auto& [m, c] : basis[j].terms()) {
        if (leads[i].divides(m)) {
          cert.reducedOk = false;
          cert.reducedDetail = "leading monomial " + format(leads[i], vars) + " divides term " +
                               format(m, vars) + " of " + format(basis[j], vars, order);
          break;
        }
      }
    }
  }

  cert.buchbergerOk = true;
  for (std::size_t i = 0; i < basis.size() && cert.buchbergerOk; ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Polynomial r = normalForm(sPolynomial(basis[i], basis[j], order), basis, order);
      if (!r.isZero()) {
        cert.buchbergerOk = false;
        cert.buchbergerDetail = "S(" + format(basis[i], vars, order) + ", " +
                                format(basis[j], vars, order) + ") reduces to " +
                                format(r, vars, order);
        break;
      }
    }
  }

  cert.dimension = quotientDimension(leads, problem.nvars());
  cert.dimensionOk = cert.dimension && *cert.dimension == cert.expectedDimension;
  if (!cert.dimensionOk) {
    cert.dimensionDetail = "staircase has " +
                           (cert.dimension ? std::to_string(*cert.dimension) : "infinitely many") +
                           " monomials, expected " + std::to_string(cert.expectedDimension);
  }
  return cert;
}

}  // namespace idealgb
