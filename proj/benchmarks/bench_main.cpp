#include <random>

#include <benchmark/benchmark.h>

#include "liecontract/liecontract.hpp"

namespace {

using namespace liecontract;

Matrix dense_random(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> value(-9, 9);
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = value(rng);
  return m;
}

void BM_Rref(benchmark::State& state) {
  const Matrix m = dense_random(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

void BM_DerivationsGm(benchmark::State& state) {
  const LieAlgebra g = make_g_m(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(derivations(g));
}
BENCHMARK(BM_DerivationsGm)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_DerivationsRm(benchmark::State& state) {
  const LieAlgebra r = build_r_m(static_cast<std::size_t>(state.range(0)), {4});
  for (auto _ : state) benchmark::DoNotOptimize(derivations(r));
}
BENCHMARK(BM_DerivationsRm)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_CharacteristicSequence(benchmark::State& state) {
  const LieAlgebra g = make_g_m_q(static_cast<std::size_t>(state.range(0)), {4});
  for (auto _ : state) benchmark::DoNotOptimize(characteristic_sequence(g));
}
BENCHMARK(BM_CharacteristicSequence)->DenseRange(4, 8, 2);

void BM_ContractionLimit(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const LieAlgebra g = make_g_m(m);
  const ExponentVector a = solve_exponents(m, {3, 5});
  for (auto _ : state) benchmark::DoNotOptimize(limit_law(scale_law(g, a)));
}
BENCHMARK(BM_ContractionLimit)->DenseRange(4, 8, 2);

}  // namespace

BENCHMARK_MAIN();
