#include "doctest.h"
#include "idealgb/error.hpp"
#include "idealgb/single_point.hpp"
#include "idealgb/verify.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace idealgb;
using namespace idealgb::test;

TEST_CASE("quotientBasisSingle") {
  const auto ord = grlexYX();
  CHECK(quotientBasisSingle({Ps({"1", "1/2*x^2 + y", "x", "1/6*x^3 - x^2 + x*y"}), ord}) ==
        Ms({"1", "y", "x", "x*y"}));
  CHECK(quotientBasisSingle({Ps({"1", "x", "1/2*x^2 + y"}), ord}) == Ms({"1", "y", "x"}));
  CHECK(quotientBasisSingle({Ps({"1"}), ord}) == Ms({"1"}));
}

TEST_CASE("borderLeadingMonomials") {
  const auto ord = grlexYX();
  CHECK(borderLeadingMonomials(Ms({"1", "x", "y"}), 2, ord) == Ms({"y^2", "x*y", "x^2"}));
  CHECK(borderLeadingMonomials(Ms({"1"}), 2, ord) == Ms({"y", "x"}));

  const auto G = borderLeadingMonomials(Ms({"1", "y", "x", "x*y"}), 2, ord);
  CHECK(G == Ms({"y^2", "x^2"}));
  const auto brute = oracle::minimalGeneratorsOfComplement(Ms({"1", "y", "x", "x*y"}), 2, 4);
  CHECK(std::set<Monomial>(G.begin(), G.end()) == brute);
}

TEST_CASE("groebnerSingle") {
  SUBCASE("instantiated closed forms at (1, 2)") {
    const ConditionSpace space{pt({1, 2}), Ps({"1", "x", "1/2*x^2 + y"})};
    const auto r = groebnerSingle(space, grlexYX());
    CHECK(r.quotientBasis == Ms({"1", "y", "x"}));
    CHECK(r.leadingMonomials == Ms({"y^2", "x*y", "x^2"}));
    CHECK(r.basis == Ps({"y^2 - 4*y + 4", "x*y - 2*x - y + 2", "x^2 - 2*x - y + 3"}));
    CHECK(certify(r, Problem{xy(), grlexYX(), {space}}).passed());
    CHECK(r.counters.rankDecisions == 0);
    CHECK(r.counters.functionalEvals == 3 * (3 + 3));
    CHECK(r.counters.truncationEvals == 3 * (3 + 3));
  }
  SUBCASE("origin, lex") {
    const auto r = groebnerSingle({pt({0, 0}), Ps({"1", "x", "1/2*x^2 + y"})}, lexYX());
    CHECK(r.basis == Ps({"y^2", "x*y", "x^2 - y"}));
  }
  SUBCASE("Hermite in x at (1, 2), lex") {
    const auto r = groebnerSingle({pt({1, 2}), Ps({"1", "x"})}, lexYX());
    CHECK(r.basis == Ps({"y - 2", "x^2 - 2*x + 1"}));
    CHECK(r.quotientBasis == Ms({"1", "x"}));
  }
  SUBCASE("non-team input is normalised") {
    const ConditionSpace space{pt({1, 2}), Ps({"1 + x", "x", "1/2*x^2 + y + 3*x"})};
    const auto r = groebnerSingle(space, grlexYX());
    CHECK(r.basis == Ps({"y^2 - 4*y + 4", "x*y - 2*x - y + 2", "x^2 - 2*x - y + 3"}));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(groebnerSingle({pt({0, 0}), Ps({"x"})}, grlexYX()), NotDInvariant);
    CHECK_THROWS_AS(groebnerSingle({pt({0, 0}), Ps({"1", "2"})}, grlexYX()),
                    DependentPolynomials);
    try {
      groebnerSingle({pt({3, 3}), Ps({"x"})}, grlexYX());
    } catch (const NotDInvariant& e) {
      CHECK(e.basisIndex() == 0);
      CHECK(e.variable() == 0);
    }
  }
  SUBCASE("unchecked non-D-invariant space is reported by verification") {
    const ConditionSpace space{pt({0, 0}), Ps({"1", "x*y"})};
    SolveOptions unchecked;
    unchecked.checkDInvariance = false;
    const auto r = groebnerSingle(space, grlexYX(), unchecked);
    const auto cert = certify(r, Problem{xy(), grlexYX(), {space}});
    CHECK_FALSE(cert.passed());
  }
}
