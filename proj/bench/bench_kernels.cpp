// Serial vs OpenMP timings for the hot loops.

#include <benchmark/benchmark.h>

#include <vector>

#include "monocorr/cube/kernels.hpp"
#include "monocorr/gauss/grid.hpp"
#include "monocorr/mc/oracle.hpp"

using namespace monocorr;

namespace {

std::vector<kernels::Word> majority_table(int n) {
  std::vector<kernels::Word> t(kernels::words_for(n));
  kernels::serial::fill_threshold(t, n, (n + 1) / 2);
  return t;
}

template <auto Fn>
void BM_exit_counts(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto table = majority_table(n);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(table, n));
}

template <auto Fn>
void BM_upward_closed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto table = majority_table(n);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(table, n));
}

template <auto Fn>
void BM_grid_slice(benchmark::State& state) {
  const gauss::GridRange t{-8, 8, 65}, rho{0.01, 1.0, 32};
  for (auto _ : state) benchmark::DoNotOptimize(Fn(t, gauss::GridRange{0, 0, 1}, rho, {}));
}

template <auto Fn>
void BM_mc_orthant(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Fn({0.5, -0.3, 0.4}, mc::McConfig{state.range(0), 7, 64}));
}

}  // namespace

BENCHMARK(BM_exit_counts<&kernels::serial::exit_counts>)->Name("exit_counts/serial")->Arg(16)->Arg(20);
BENCHMARK(BM_exit_counts<&kernels::parallel::exit_counts>)->Name("exit_counts/parallel")->Arg(16)->Arg(20);
BENCHMARK(BM_upward_closed<&kernels::serial::is_upward_closed>)->Name("upward_closed/serial")->Arg(20);
BENCHMARK(BM_upward_closed<&kernels::parallel::is_upward_closed>)->Name("upward_closed/parallel")->Arg(20);
BENCHMARK(BM_grid_slice<&gauss::serial::gamma_grid_min>)->Name("gamma_slice/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_grid_slice<&gauss::parallel::gamma_grid_min>)->Name("gamma_slice/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mc_orthant<&mc::serial::mc_orthant>)->Name("mc_orthant/serial")->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mc_orthant<&mc::parallel::mc_orthant>)->Name("mc_orthant/parallel")->Arg(1'000'000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
