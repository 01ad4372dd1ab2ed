#include <random>

#include <benchmark/benchmark.h>

#include "stpcs/bibd.hpp"
#include "stpcs/metrics.hpp"
#include "stpcs/stp.hpp"

namespace {

stpcs::DenseMatrix random_matrix(std::size_t m, std::size_t n) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  stpcs::DenseMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = d(rng);
  return a;
}

void BM_SparkRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(n / 2, n);
  for (auto _ : state) benchmark::DoNotOptimize(stpcs::spark(a));
}
BENCHMARK(BM_SparkRandom)->DenseRange(8, 16, 4);

void BM_SparkLifted(benchmark::State& state) {
  const auto a = stpcs::lift(random_matrix(4, 6), static_cast<std::size_t>(state.range(0)), stpcs::Side::Right);
  for (auto _ : state) benchmark::DoNotOptimize(stpcs::spark(a));
}
BENCHMARK(BM_SparkLifted)->Arg(1)->Arg(2)->Arg(3);

void BM_Coherence(benchmark::State& state) {
  const auto alpha = static_cast<std::size_t>(state.range(0));
  const auto h = stpcs::vertical_expand_star(alpha).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(stpcs::coherence(h));
}
BENCHMARK(BM_Coherence)->DenseRange(4, 12, 4);

void BM_RipCheck(benchmark::State& state) {
  const auto a = random_matrix(8, 16);
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(stpcs::rip_check(a, k));
}
BENCHMARK(BM_RipCheck)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
