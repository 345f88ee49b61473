#include "smw/classes.hpp"
#include "smw/hamiltonian.hpp"
#include "smw/kernel.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_BuildHamiltonian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(smw::Hamiltonian(smw::ModelSpec::s31(0), n));
}
BENCHMARK(BM_BuildHamiltonian)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_ExactKernel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  smw::Hamiltonian h(smw::ModelSpec::s31(0), n);
  for (auto _ : state) benchmark::DoNotOptimize(smw::exact_kernel(h));
  state.counters["states"] = static_cast<double>(h.basis().size());
}
BENCHMARK(BM_ExactKernel)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_ExactKernelLink(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  smw::HamiltonianOptions o;
  o.rep = smw::Representation::Link;
  smw::Hamiltonian h(smw::ModelSpec::s31(0), n, o);
  for (auto _ : state) benchmark::DoNotOptimize(smw::exact_kernel(h));
  state.counters["states"] = static_cast<double>(h.basis().size());
}
BENCHMARK(BM_ExactKernelLink)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_GroundClasses(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  smw::Hamiltonian h(smw::ModelSpec::s32_case2(1), n);
  for (auto _ : state) benchmark::DoNotOptimize(smw::ground_classes(h));
}
BENCHMARK(BM_GroundClasses)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_FloatKernel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  smw::Hamiltonian h(smw::ModelSpec::s21(), n);
  auto H = h.numeric();
  for (auto _ : state) benchmark::DoNotOptimize(smw::float_kernel(H));
}
BENCHMARK(BM_FloatKernel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
