#include <benchmark/benchmark.h>

#include <numeric>

#include "su2knots/census.hpp"
#include "su2knots/construct.hpp"
#include "su2knots/groups.hpp"
#include "su2knots/slopes.hpp"
#include "su2knots/solver.hpp"

namespace {

using namespace su2knots;

void BM_WitnessMontesinos(benchmark::State& state) {
  const MontesinosKnot knot = montesinos_validate({{1, 3}, {1, 5}, {1, 7}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(witness_montesinos(knot));
  }
}
BENCHMARK(BM_WitnessMontesinos);

void BM_TraceFreeCensus(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(trace_free_census(p, p - 4, 1024));
  }
}
BENCHMARK(BM_TraceFreeCensus)->Arg(7)->Arg(15);

void BM_VerifyGluingCovers(benchmark::State& state) {
  const TorusKnotParams k1 = TorusKnotParams::normalized(2, 3);
  const TorusKnotParams k2 = TorusKnotParams::normalized(-5, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_gluing_covers(k1, k2, 6));
  }
}
BENCHMARK(BM_VerifyGluingCovers);

void BM_SpliceSweep(benchmark::State& state) {
  std::vector<TorusKnotParams> knots;
  for (int p = 2; p <= 5; ++p) {
    for (int q = 2; q <= 5; ++q) {
      if (std::gcd(p, q) != 1) continue;
      knots.push_back(TorusKnotParams::normalized(p, q));
      knots.push_back(TorusKnotParams::normalized(-p, q));
    }
  }
  for (auto _ : state) {
    bool all = true;
    for (const auto& k1 : knots) {
      for (const auto& k2 : knots) {
        all = all && verify_gluing_covers(k1, k2, 0).containment;
      }
    }
    benchmark::DoNotOptimize(all);
  }
}
BENCHMARK(BM_SpliceSweep);

void BM_H1Order(benchmark::State& state) {
  const Presentation s = seifert_group(
      std::vector<Tangle>{{1, 3}, {2, 5}, {4, 7}, {1, 9}, {2, 11}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(h1_order(s));
  }
}
BENCHMARK(BM_H1Order);

void BM_SolveTwoBridge(benchmark::State& state) {
  SolveProblem problem;
  problem.presentation = two_bridge_group(5, 3);
  problem.trace_constraints = {{0, 0.0}, {1, 0.0}};
  problem.restarts = static_cast<int>(state.range(0));
  problem.seed = 11;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(problem));
  }
}
BENCHMARK(BM_SolveTwoBridge)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
