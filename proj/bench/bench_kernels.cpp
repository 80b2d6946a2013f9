// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "eefx/certificates.hpp"
#include "eefx/generators.hpp"
#include "eefx/identical_efx.hpp"
#include "eefx/solver.hpp"
#include "eefx/valuation.hpp"

namespace {

using namespace eefx;

Exec exec_of(const benchmark::State& state) { return state.range(1) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(1) ? "parallel" : "serial"); }

void BM_IdenticalEfxPartition(benchmark::State& state) {
  Rng rng(1);
  const int m = static_cast<int>(state.range(0));
  const auto v = random_coverage(rng, m);
  for (auto _ : state)
    benchmark::DoNotOptimize(identical_efx_partition(v, Bundle::full(m), 3, {exec_of(state), 14}));
  label(state);
}
BENCHMARK(BM_IdenticalEfxPartition)->ArgsProduct({{6, 8, 10}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_FindCertificate(benchmark::State& state) {
  Rng rng(2);
  const int m = static_cast<int>(state.range(0));
  const auto v = random_monotone_table(rng, m);
  // A held bundle of one item: few certificates exist, so the search is deep.
  for (auto _ : state)
    benchmark::DoNotOptimize(find_certificate(v, Bundle{0}, Bundle::full(m), 4, {exec_of(state), 14}));
  label(state);
}
BENCHMARK(BM_FindCertificate)->ArgsProduct({{8, 10, 12}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_CheckSubmodular(benchmark::State& state) {
  Rng rng(3);
  const int m = static_cast<int>(state.range(0));
  const auto v = random_coverage(rng, m);
  for (auto _ : state) {
    if (state.range(1)) {
      benchmark::DoNotOptimize(check_submodular(v));
    } else {
      benchmark::DoNotOptimize(serial::check_submodular(v));
    }
  }
  label(state);
}
BENCHMARK(BM_CheckSubmodular)->ArgsProduct({{10, 14, 16}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_SolveEefx(benchmark::State& state) {
  GenParams p;
  p.family = "mixed";
  p.n = 4;
  p.m = static_cast<int>(state.range(0));
  p.seed = 9;
  const Instance inst = generate_instance(p);
  SolverOptions options;
  options.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(solve_eefx(inst, options));
  label(state);
}
BENCHMARK(BM_SolveEefx)->ArgsProduct({{6, 8, 10}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
