#include "smw/counting.hpp"
#include "smw/entangle.hpp"
#include "smw/series.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_TransferSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto m = smw::ModelSpec::s31(0);
  for (auto _ : state) benchmark::DoNotOptimize(smw::count_rows(m, 1, {n}));
  state.SetComplexityN(n);
}
BENCHMARK(BM_TransferSweep)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond)->Complexity();

void BM_TransferSweepColored(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto m = smw::ModelSpec::s32_case2(1);
  for (auto _ : state) benchmark::DoNotOptimize(smw::count_rows(m, 1, {n}, true));
}
BENCHMARK(BM_TransferSweepColored)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_ClosedFormSeries(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  auto m = smw::ModelSpec::s31(0);
  for (auto _ : state) benchmark::DoNotOptimize(smw::closed_form(m, {1, 1, 2, false}, order));
}
BENCHMARK(BM_ClosedFormSeries)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_EntropyFromCounts(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    smw::CountTable t(smw::ModelSpec::s31(0));
    benchmark::DoNotOptimize(smw::entropy_from_counts(t, n, 1, 1));
  }
}
BENCHMARK(BM_EntropyFromCounts)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace
