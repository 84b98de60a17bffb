#pragma once

#include <vector>

#include "idealgb/functionals.hpp"
#include "idealgb/single_point.hpp"

namespace idealgb {

/// Output of the incremental Vandermonde elimination.
struct MmmResult {
  std::vector<Monomial> quotientBasis;     // ascending
  std::vector<Monomial> leadingMonomials;  // ascending
  std::vector<Polynomial> basis;           // aligned with leadingMonomials
  OpCounters counters;
};

/// Quotient basis, leading monomials and reduced basis by the
/// Marinari-Moeller-Mora procedure.
///
/// Candidates are taken in ascending order starting from 1. Each candidate's
/// evaluation vector is reduced against the echelon rows of the current
/// quotient monomials. A nonzero remainder puts the candidate into the
/// quotient basis and its variable multiples into the pool; a zero remainder
/// yields the basis element t - sum c_s s and prunes multiples of t.
///
/// Throws DependentConditions if fewer than n quotient monomials are found.
MmmResult mmmQuotient(const std::vector<Functional>& functionals, const MonomialOrder& order,
                      OpCounters* counters = nullptr);

/// Quotient basis and leading monomials from mmmQuotient, then the basis from
/// the truncated shifted series of every functional. Never dispatches to the
/// single-point path. The two bases are cross-checked for equality.
GroebnerResult groebnerMmm(const Problem& problem, const SolveOptions& options = {});

/// groebnerSingle when the problem has a single condition space,
/// groebnerMmm otherwise.
GroebnerResult groebnerMulti(const Problem& problem, const SolveOptions& options = {});

}  // namespace idealgb
