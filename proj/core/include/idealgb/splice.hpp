#pragma once

#include <cstddef>
#include <vector>

#include "idealgb/functionals.hpp"
#include "idealgb/single_point.hpp"
#include "idealgb/verify.hpp"

namespace idealgb {

struct BezoutResult {
  Polynomial gcd;  // monic
  Polynomial u;
  Polynomial v;
};

/// u*f + v*g = gcd(f, g) for f, g univariate in x_var.
BezoutResult extendedGcdUnivariate(const Polynomial& f, const Polynomial& g, std::size_t var);

/// Two reduced bases of disjoint sub-problems under the same lex order.
struct SpliceInput {
  GroebnerResult basisA;
  Problem problemA;
  GroebnerResult basisB;
  Problem problemB;
};

struct SpliceOutcome {
  GroebnerResult result;
  Problem combined;
  Certificate certificate;
  /// Bezout cofactors of the two least-variable generators a1, b1:
  /// u*a1 + v*b1 = 1.
  Polynomial u;
  Polynomial v;
};

/// Reduced basis of I(Delta_A u Delta_B) from the bases of the two parts.
///
/// Let a1, b1 be the generators univariate in the least variable and
/// u*a1 + v*b1 = 1. Candidates are a1*b1; (u*a1)*b + (v*b1)*a for pairs
/// a, b sharing a leading monomial; a*b1 and b*a1 for the remaining
/// elements. The candidates are inter-reduced, made monic and certified
/// against the combined conditions.
///
/// Throws SpliceNotApplicable when the preconditions fail and
/// SpliceVerificationFailed when the candidate basis is not certified.
SpliceOutcome spliceTwo(const SpliceInput& input);

/// Splits the problem into its condition spaces, solves each with
/// groebnerSingle and folds them together with spliceTwo.
SpliceOutcome spliceAll(const Problem& problem, const SolveOptions& options = {});

}  // namespace idealgb
