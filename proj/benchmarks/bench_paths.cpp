// Single-point path against the MMM path on Taylor-type conditions
// span{x^a y^b : a + b < k} at one point, n = k(k+1)/2.

#include <benchmark/benchmark.h>

#include "idealgb/multi_point.hpp"
#include "idealgb/single_point.hpp"

using namespace idealgb;

namespace {

Problem taylorProblem(unsigned k) {
  std::vector<Polynomial> space;
  for (unsigned deg = 0; deg < k; ++deg) {
    for (unsigned a = 0; a <= deg; ++a) {
      space.push_back(Polynomial::monomial(Monomial({a, deg - a})));
    }
  }
  // Mix neighbours so the input is not already a team.
  for (std::size_t i = space.size(); i-- > 1;) space[i] += Rational(1, 3) * space[i - 1];
  return Problem{{"x", "y"}, MonomialOrder::grlex({0, 1}), {{{Rational(1), Rational(-2)}, space}}};
}

void BM_Single(benchmark::State& state) {
  const Problem p = taylorProblem(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(groebnerSingle(p.conditions.front(), p.order));
  }
  state.counters["n"] = static_cast<double>(p.functionalCount());
}

void BM_Mmm(benchmark::State& state) {
  const Problem p = taylorProblem(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(groebnerMmm(p));
  }
  state.counters["n"] = static_cast<double>(p.functionalCount());
}

}  // namespace

BENCHMARK(BM_Single)->DenseRange(2, 6);
BENCHMARK(BM_Mmm)->DenseRange(2, 6);
BENCHMARK_MAIN();
