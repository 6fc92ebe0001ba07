#include <benchmark/benchmark.h>

#include <vector>

#include <cfknot/smallness.hpp>

using namespace cfknot;

namespace {

SmallnessProblem alternating_problem(int length) {
  std::vector<Int> coefficients;
  coefficients.reserve(length);
  for (int i = 0; i < length; ++i) {
    coefficients.push_back(i % 2 == 0 ? 3 + i % 5 : -(2 + i % 4));
  }
  return SmallnessProblem{std::move(coefficients)};
}

void BM_NoConsecutiveSubsets(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(no_consecutive_subsets(k));
  }
}

void BM_EnumerateWitnesses(benchmark::State& state) {
  const SmallnessProblem problem =
      alternating_problem(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_witnesses(problem));
  }
}

void BM_FamilyScan(benchmark::State& state) {
  const Int width = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(family_smallness_scan(5, 3, 2, 2 + width));
  }
}

}  // namespace

BENCHMARK(BM_NoConsecutiveSubsets)->DenseRange(8, 24, 4);
BENCHMARK(BM_EnumerateWitnesses)->DenseRange(8, 24, 4);
BENCHMARK(BM_FamilyScan)->RangeMultiplier(4)->Range(16, 1024);

BENCHMARK_MAIN();
