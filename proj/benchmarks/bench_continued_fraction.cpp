#include <benchmark/benchmark.h>

#include <cfknot/continued_fraction.hpp>
#include <cfknot/curves.hpp>

using namespace cfknot;

namespace {

ContinuedFraction alternating_list(int length) {
  ContinuedFraction cf;
  cf.coefficients.reserve(length);
  for (int i = 0; i < length; ++i) {
    cf.coefficients.push_back(i % 2 == 0 ? 3 + i % 5 : -(2 + i % 4));
  }
  return cf;
}

// Consecutive Fibonacci numbers give the slowest-reducing fractions.
ProjectiveRational fibonacci_ratio(int index) {
  Int previous = 1;
  Int current = 1;
  for (int i = 2; i <= index; ++i) {
    const Int next = previous + current;
    previous = current;
    current = next;
  }
  return ProjectiveRational(current, previous);
}

void BM_Evaluate(benchmark::State& state) {
  const ContinuedFraction cf = alternating_list(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(cf));
  }
}

void BM_Expand(benchmark::State& state) {
  const ProjectiveRational q = fibonacci_ratio(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(expand(q));
  }
}

void BM_ExpandEvaluateRoundTrip(benchmark::State& state) {
  const ProjectiveRational q = fibonacci_ratio(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(expand(q)));
  }
}

void BM_KnotClass(benchmark::State& state) {
  const Int scale = Int(1) << state.range(0);
  const FamilyParams params(scale + 3, scale + 2, scale);
  for (auto _ : state) {
    benchmark::DoNotOptimize(knot_class(params));
  }
}

void BM_FamilyTwistWord(benchmark::State& state) {
  const Int scale = Int(1) << state.range(0);
  const FamilyParams params(scale + 3, scale + 2, scale);
  const TwistWord word = family_twist_word(params);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_twist_word(word, CurveClass::a()));
  }
}

}  // namespace

BENCHMARK(BM_Evaluate)->RangeMultiplier(4)->Range(8, 2048);
BENCHMARK(BM_Expand)->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(BM_ExpandEvaluateRoundTrip)->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(BM_KnotClass)->DenseRange(8, 64, 28);
BENCHMARK(BM_FamilyTwistWord)->DenseRange(8, 64, 28);

BENCHMARK_MAIN();
