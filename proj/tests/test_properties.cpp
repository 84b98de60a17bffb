#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "idealgb/multi_point.hpp"
#include "idealgb/verify.hpp"

using namespace idealgb;

namespace {

bool isLowerSet(const std::vector<Monomial>& Q) {
  const std::set<Monomial> q(Q.begin(), Q.end());
  for (const auto& m : Q) {
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] > 0 && !q.contains(m / Monomial::variable(m.nvars(), i))) return false;
    }
  }
  return q.contains(Monomial(Q.front().nvars()));
}

void checkResult(const GroebnerResult& r, const Problem& problem) {
  const std::size_t n = problem.functionalCount();
  CHECK(r.quotientBasis.size() == n);
  CHECK(isLowerSet(r.quotientBasis));
  CHECK(r.basis.size() == r.leadingMonomials.size());
  for (std::size_t i = 0; i < r.basis.size(); ++i) {
    CHECK(leadingMonomial(r.basis[i], problem.order) == r.leadingMonomials[i]);
  }
  for (const auto& q : r.quotientBasis) {
    for (const auto& g : r.leadingMonomials) CHECK_FALSE(g.divides(q));
  }
  const auto cert = certify(r, problem);
  CHECK_MESSAGE(cert.passed(), cert.vanishingDetail, cert.reducedDetail,
                cert.buchbergerDetail, cert.dimensionDetail);
  CHECK(cert.dimension == r.quotientBasis.size());
}

}  // namespace

TEST_CASE("single-point path agrees with the MMM path") {
  std::mt19937 rng(1234);
  for (int round = 0; round < 40; ++round) {
    const std::size_t d = 1 + round % 3;
    const Problem problem = gen::singlePointProblem(d, 10, rng);
    const auto single = groebnerSingle(problem.conditions.front(), problem.order);
    const auto mmm = groebnerMmm(problem);
    CHECK(single.basis == mmm.basis);
    CHECK(single.quotientBasis == mmm.quotientBasis);
    CHECK(single.leadingMonomials == mmm.leadingMonomials);
    checkResult(single, problem);

    const std::size_t n = problem.functionalCount();
    const std::size_t m = single.basis.size();
    CHECK(single.counters.rankDecisions == 0);
    CHECK(single.counters.functionalEvals == n * (m + n));
    CHECK(mmm.counters.truncationEvals == n * (m + n));
  }
}

TEST_CASE("multi-point results certify") {
  std::mt19937 rng(99);
  for (int round = 0; round < 30; ++round) {
    const std::size_t d = 1 + round % 3;
    const Problem problem = gen::multiPointProblem(d, 10, rng);
    const auto r = groebnerMulti(problem);
    checkResult(r, problem);
    const auto fs = flatten(problem);
    const auto mmm = mmmQuotient(fs, problem.order);
    CHECK(mmm.basis == r.basis);
  }
}
