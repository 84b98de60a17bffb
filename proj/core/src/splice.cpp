#include "idealgb/splice.hpp"

#include <algorithm>
#include <optional>

#include "idealgb/error.hpp"

namespace idealgb {

namespace {

Monomial::Exponent degree(const Polynomial& p, std::size_t var) { return p.degreeIn(var); }

Rational leadingCoefficientIn(const Polynomial& p, std::size_t var) {
  return p.coefficient(Monomial::variable(p.nvars(), var, degree(p, var)));
}

// Quotient and remainder of univariate division in x_var.
std::pair<Polynomial, Polynomial> divide(Polynomial a, const Polynomial& b, std::size_t var) {
  const auto db = degree(b, var);
  const Rational lb = leadingCoefficientIn(b, var);
  Polynomial q(a.nvars());
  while (!a.isZero() && degree(a, var) >= db) {
    const auto shift = degree(a, var) - db;
    const Monomial m = Monomial::variable(a.nvars(), var, shift);
    const Rational c = leadingCoefficientIn(a, var) / lb;
    q.addTerm(m, c);
    a -= (b * m) * c;
  }
  return {std::move(q), std::move(a)};
}

std::optional<std::size_t> leastVariableGenerator(const GroebnerResult& r, std::size_t var) {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < r.basis.size(); ++i) {
    const auto& g = r.basis[i];
    if (g.isUnivariateIn(var) && degree(g, var) > 0) {
      if (found) return std::nullopt;
      found = i;
    }
  }
  return found;
}

}  // namespace

BezoutResult extendedGcdUnivariate(const Polynomial& f, const Polynomial& g, std::size_t var) {
  if (f.isZero() || g.isZero()) throw Error("extended gcd of the zero polynomial");
  if (!f.isUnivariateIn(var) || !g.isUnivariateIn(var)) {
    throw Error("extended gcd inputs are not univariate in the given variable");
  }
  const std::size_t d = f.nvars();
  Polynomial r0 = f, r1 = g;
  Polynomial s0 = Polynomial::constant(d, 1), s1(d);
  Polynomial t0(d), t1 = Polynomial::constant(d, 1);
  while (!r1.isZero()) {
    auto [q, r] = divide(r0, r1, var);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  const Rational inv = 1 / leadingCoefficientIn(r0, var);
  return {r0 * inv, s0 * inv, t0 * inv};
}

SpliceOutcome spliceTwo(const SpliceInput& input) {
  const Problem& pa = input.problemA;
  const Problem& pb = input.problemB;
  if (pa.variables != pb.variables || !(pa.order == pb.order)) {
    throw SpliceNotApplicable("sub-problems use different variables or orders");
  }
  const MonomialOrder& order = pa.order;
  if (order.kind() != MonomialOrder::Kind::Lex) {
    throw SpliceNotApplicable("splicing requires a lex order");
  }
  for (const auto& ca : pa.conditions) {
    for (const auto& cb : pb.conditions) {
      if (ca.point == cb.point) throw SpliceNotApplicable("sub-problems share a point");
    }
  }
  const std::size_t var = order.leastVariable();
  const auto ia = leastVariableGenerator(input.basisA, var);
  const auto ib = leastVariableGenerator(input.basisB, var);
  if (!ia || !ib) {
    throw SpliceNotApplicable(
        "each basis needs exactly one generator univariate in the least variable");
  }
  const Polynomial& a1 = input.basisA.basis[*ia];
  const Polynomial& b1 = input.basisB.basis[*ib];
  const BezoutResult bez = extendedGcdUnivariate(a1, b1, var);
  if (bez.gcd != Polynomial::constant(order.nvars(), 1)) {
    throw SpliceNotApplicable("least-variable generators are not coprime");
  }

  std::vector<Polynomial> candidates{a1 * b1};
  const Polynomial ua1 = bez.u * a1;
  const Polynomial vb1 = bez.v * b1;
  std::vector<bool> bUsed(input.basisB.basis.size(), false);
  bUsed[*ib] = true;
  for (std::size_t i = 0; i < input.basisA.basis.size(); ++i) {
    if (i == *ia) continue;
    const Polynomial& a = input.basisA.basis[i];
    const Monomial lead = leadingMonomial(a, order);
    bool matched = false;
    for (std::size_t j = 0; j < input.basisB.basis.size(); ++j) {
      if (bUsed[j] || leadingMonomial(input.basisB.basis[j], order) != lead) continue;
      candidates.push_back(ua1 * input.basisB.basis[j] + vb1 * a);
      bUsed[j] = true;
      matched = true;
      break;
    }
    if (!matched) candidates.push_back(a * b1);
  }
  for (std::size_t j = 0; j < input.basisB.basis.size(); ++j) {
    if (!bUsed[j]) candidates.push_back(input.basisB.basis[j] * a1);
  }

  std::erase_if(candidates, [](const Polynomial& p) { return p.isZero(); });
  for (auto& c : candidates) c *= 1 / leadingCoefficient(c, order);
  std::sort(candidates.begin(), candidates.end(), [&](const Polynomial& x, const Polynomial& y) {
    return order.less(leadingMonomial(x, order), leadingMonomial(y, order));
  });
  // Keep only candidates whose leading monomial is not a multiple of an
  // earlier (smaller) one.
  std::vector<Polynomial> minimal;
  for (auto& c : candidates) {
    const Monomial lead = leadingMonomial(c, order);
    const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& m) {
      return leadingMonomial(m, order).divides(lead);
    });
    if (!redundant) minimal.push_back(std::move(c));
  }

  Problem combined = pa;
  combined.conditions.insert(combined.conditions.end(), pb.conditions.begin(),
                             pb.conditions.end());
  SpliceOutcome out{GroebnerResult{}, std::move(combined), Certificate{}, bez.u, bez.v};
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    const Monomial lead = leadingMonomial(minimal[i], order);
    Polynomial tail = minimal[i];
    tail.addTerm(lead, -1);
    Polynomial g = normalForm(tail, others, order);
    g.addTerm(lead, 1);
    out.result.leadingMonomials.push_back(lead);
    out.result.basis.push_back(std::move(g));
  }
  if (auto stairs = staircase(out.result.leadingMonomials, order.nvars(), order)) {
    out.result.quotientBasis = std::move(*stairs);
  }
  out.result.counters = input.basisA.counters;
  out.result.counters += input.basisB.counters;

  out.certificate = certify(out.result, out.combined);
  if (!out.certificate.passed()) {
    std::string why = out.certificate.vanishingDetail + out.certificate.reducedDetail +
                      out.certificate.buchbergerDetail + out.certificate.dimensionDetail;
    throw SpliceVerificationFailed("spliced basis failed verification: " + why);
  }
  return out;
}

SpliceOutcome spliceAll(const Problem& problem, const SolveOptions& options) {
  validate(problem);
  if (problem.conditions.size() < 2) {
    throw SpliceNotApplicable("splicing needs at least two condition spaces");
  }
  auto part = [&](std::size_t k) {
    Problem p{problem.variables, problem.order, {problem.conditions[k]}};
    if (options.checkDInvariance) requireDInvariant(problem.conditions[k], k);
    SolveOptions unchecked = options;
    unchecked.checkDInvariance = false;
    return std::pair{groebnerSingle(problem.conditions[k], problem.order, unchecked), p};
  };
  auto [firstBasis, firstProblem] = part(0);
  auto [secondBasis, secondProblem] = part(1);
  SpliceOutcome acc = spliceTwo({firstBasis, firstProblem, secondBasis, secondProblem});
  for (std::size_t k = 2; k < problem.conditions.size(); ++k) {
    auto [nextBasis, nextProblem] = part(k);
    acc = spliceTwo({acc.result, acc.combined, nextBasis, nextProblem});
  }
  return acc;
}

}  // namespace idealgb
