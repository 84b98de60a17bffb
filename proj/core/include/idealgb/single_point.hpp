#pragma once

#include <cstddef>
#include <vector>

#include "idealgb/counters.hpp"
#include "idealgb/elimination.hpp"
#include "idealgb/functionals.hpp"

namespace idealgb {

/// Quotient basis, leading monomials and reduced Groebner basis of I(Delta).
///
/// `basis[i]` has leading monomial `leadingMonomials[i]` (the greatest
/// monomial under the order) and is monic; both lists ascend under the order.
struct GroebnerResult {
  std::vector<Monomial> quotientBasis;
  std::vector<Monomial> leadingMonomials;
  std::vector<Polynomial> basis;
  OpCounters counters;
};

struct SolveOptions {
  /// Reject condition spaces whose span is not closed under differentiation.
  bool checkDInvariance = true;
};

/// The least monomials of a team, ascending.
std::vector<Monomial> quotientBasisSingle(const Team& team);

/// Minimal generators of the monomial ideal complementing the lower set Q,
/// picked in ascending order from the border {x_i * q}.
std::vector<Monomial> borderLeadingMonomials(const std::vector<Monomial>& quotient,
                                             std::size_t nvars, const MonomialOrder& order);

/// Truncates each functional's shifted series to G u Q, reduces the
/// truncations to a team and reads off
///   G_i = X^a_i - sum_j (a_i! / b_j!) q*_j(a_i) X^b_j
/// for every leading monomial a_i in `leading`.
std::vector<Polynomial> basisFromTruncations(const std::vector<Functional>& functionals,
                                             const std::vector<Monomial>& quotient,
                                             const std::vector<Monomial>& leading,
                                             const MonomialOrder& order, OpCounters& counters);

/// Reduced Groebner basis for one point. The basis is first normalised to a
/// team, whose least monomials give the quotient basis without any rank
/// decisions.
///
/// Throws DependentPolynomials, and NotDInvariant when checking is enabled.
GroebnerResult groebnerSingle(const ConditionSpace& space, const MonomialOrder& order,
                              const SolveOptions& options = {});

/// Throws NotDInvariant with a witness if `space` is not closed under
/// differentiation.
void requireDInvariant(const ConditionSpace& space, std::size_t spaceIndex = 0);

}  // namespace idealgb
