#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "idealgb/functionals.hpp"
#include "idealgb/single_point.hpp"

namespace idealgb {

// Verification uses the conventional leading monomial: the greatest monomial
// under the order. Basis elements produced by the algorithms have the form
// X^a - (terms on the quotient basis), so X^a is greatest and both
// conventions describe the same element.

/// Remainder of multivariate division of f by `basis`. Divisors are tried in
/// ascending order of leading monomial, first divisor wins.
Polynomial normalForm(const Polynomial& f, const std::vector<Polynomial>& basis,
                      const MonomialOrder& order);

/// lcm-cancellation combination of f and g.
Polynomial sPolynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Monomials divisible by none of `leading`, ascending; nullopt when that set
/// is infinite.
std::optional<std::vector<Monomial>> staircase(const std::vector<Monomial>& leading,
                                               std::size_t nvars, const MonomialOrder& order);

/// Size of staircase(); nullopt when infinite.
std::optional<std::size_t> quotientDimension(const std::vector<Monomial>& leading,
                                             std::size_t nvars);

struct VanishingWitness {
  std::size_t functionalIndex;  // index into flatten(problem)
  std::size_t basisIndex;
  Rational value;
};

struct Certificate {
  bool vanishingOk = false;
  bool reducedOk = false;
  bool buchbergerOk = false;
  bool dimensionOk = false;

  std::optional<VanishingWitness> vanishingWitness;
  std::optional<std::size_t> dimension;  // nullopt: infinite
  std::size_t expectedDimension = 0;

  // First failing witness per check, human readable; empty when the check passed.
  std::string vanishingDetail;
  std::string reducedDetail;
  std::string buchbergerDetail;
  std::string dimensionDetail;

  bool passed() const noexcept { return vanishingOk && reducedOk && buchbergerOk && dimensionOk; }
};

/// Checks that `basis` is the reduced Groebner basis of I(Delta): every
/// element is annihilated by every functional, the basis is reduced, every
/// S-polynomial reduces to zero and the staircase has n monomials.
Certificate certify(const std::vector<Polynomial>& basis, const Problem& problem);
inline Certificate certify(const GroebnerResult& result, const Problem& problem) {
  return certify(result.basis, problem);
}

}  // namespace idealgb
