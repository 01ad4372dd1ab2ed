#include <string>

#include <benchmark/benchmark.h>

#include "stpcs/bibd.hpp"
#include "stpcs/pipeline.hpp"

namespace {

stpcs::DenseMatrix phi() {
  const stpcs::SignMatrix b(stpcs::DenseMatrix{{1, 1, 1, -1}, {1, -1, 1, 1}, {1, 1, -1, 1}});
  return stpcs::horizontal_expand(stpcs::vertical_expand(stpcs::incidence_matrix(4)), b);
}

stpcs::Signal planted(std::size_t s) {
  auto x = stpcs::Signal::zeros(16 * s);
  for (std::size_t b = 0; b < s; ++b) x[16 * b + (5 * b + 3) % 16] = b % 2 == 0 ? 1.0 : -2.0;
  return x;
}

void BM_Compress(benchmark::State& state) {
  const auto a = phi();
  const auto s = static_cast<std::size_t>(state.range(0));
  const auto x = planted(s);
  for (auto _ : state) benchmark::DoNotOptimize(stpcs::compress(a, x, stpcs::Side::Right));
}
BENCHMARK(BM_Compress)->RangeMultiplier(2)->Range(1, 64);

void BM_Recover(benchmark::State& state) {
  const auto a = phi();
  const auto s = static_cast<std::size_t>(state.range(0));
  const auto side = state.range(1) == 0 ? stpcs::Side::Left : stpcs::Side::Right;
  const auto y = stpcs::compress(a, planted(s), side);
  const stpcs::SparsitySpec spec{16, 1, stpcs::SparsitySpec::Mode::Blockwise};
  for (auto _ : state) benchmark::DoNotOptimize(stpcs::recover(a, s, y, spec, side));
  state.SetLabel(std::string(stpcs::to_string(side)));
}
BENCHMARK(BM_Recover)->ArgsProduct({{1, 4, 16}, {0, 1}});

}  // namespace

BENCHMARK_MAIN();
