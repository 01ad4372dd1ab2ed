#include <benchmark/benchmark.h>

#include "stpcs/basis.hpp"

namespace {

void BM_BasisUpTo(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(stpcs::basis_up_to(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_BasisUpTo)->RangeMultiplier(4)->Range(8, 512);

void BM_OrthonormalBasis(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(stpcs::orthonormal_basis(m, stpcs::Side::Left));
}
BENCHMARK(BM_OrthonormalBasis)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
