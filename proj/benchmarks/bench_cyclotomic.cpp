#include <benchmark/benchmark.h>

#include "ctkit/cyclotomic.hpp"

using namespace ctkit;

namespace {

Cyclotomic dense_value(int n) {
  std::vector<std::pair<int, Rational>> terms;
  for (int e = 0; e < euler_phi(n); ++e) {
    terms.emplace_back(e, Rational(Integer(e + 1), Integer(e % 5 + 2)));
  }
  return Cyclotomic::from_terms(n, terms);
}

void BM_RootOfUnityProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Cyclotomic a = root_of_unity(n, 1);
  const Cyclotomic b = root_of_unity(n, n - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_RootOfUnityProduct)->Arg(12)->Arg(60)->Arg(360);

void BM_DenseProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Cyclotomic a = dense_value(n);
  const Cyclotomic b = conjugate(a);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_DenseProduct)->Arg(12)->Arg(60)->Arg(105);

void BM_MixedConductorSum(benchmark::State& state) {
  const Cyclotomic a = dense_value(8);
  const Cyclotomic b = dense_value(12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a + b);
  }
}
BENCHMARK(BM_MixedConductorSum);

void BM_Conjugate(benchmark::State& state) {
  const Cyclotomic a = dense_value(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(conjugate(a));
  }
}
BENCHMARK(BM_Conjugate)->Arg(12)->Arg(105);

void BM_CyclotomicPolynomialLookup(benchmark::State& state) {
  cyclotomic_polynomial(360);  // populate the memo once
  for (auto _ : state) {
    benchmark::DoNotOptimize(cyclotomic_polynomial(360));
  }
}
BENCHMARK(BM_CyclotomicPolynomialLookup);

}  // namespace
