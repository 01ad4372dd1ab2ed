#include <benchmark/benchmark.h>

#include "stpcs/bibd.hpp"

namespace {

void BM_VerticalExpand(benchmark::State& state) {
  const auto h = stpcs::incidence_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(stpcs::vertical_expand(h));
}
BENCHMARK(BM_VerticalExpand)->DenseRange(4, 16, 4);

void BM_VerticalExpandStar(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(stpcs::vertical_expand_star(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_VerticalExpandStar)->DenseRange(4, 16, 4);

void BM_EquivalentUnderSignGroup(benchmark::State& state) {
  const auto a = stpcs::aocm(7);
  const auto b = stpcs::canonicalize(a, 3);
  for (auto _ : state) benchmark::DoNotOptimize(stpcs::equivalent_under_sign_group(a, b));
}
BENCHMARK(BM_EquivalentUnderSignGroup);

void BM_Extensions(benchmark::State& state) {
  const auto a = stpcs::ocm(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(stpcs::sign_matrix_extensions(a, stpcs::SignClass::OCM));
}
BENCHMARK(BM_Extensions)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
