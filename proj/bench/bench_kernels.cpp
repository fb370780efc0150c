#include <benchmark/benchmark.h>

#include "qblocks/blocks.hpp"
#include "qblocks/qmatrix.hpp"
#include "qblocks/uqsl2.hpp"

using namespace qblocks;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(1) ? Exec::Parallel : Exec::Serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(1) ? "parallel" : "serial"); }

void BM_BuildM(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_M(static_cast<int>(state.range(0)), exec_of(state)));
  label(state);
}

void BM_BuildMinv(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_Minv_tilings(static_cast<int>(state.range(0)), exec_of(state)));
  label(state);
}

void BM_BuildMRecursive(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_M_recursive(static_cast<int>(state.range(0)), exec_of(state)));
  label(state);
}

void BM_Projections(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_all_projections(static_cast<int>(state.range(0)), exec_of(state)));
  label(state);
}

void BM_OdeGrid(benchmark::State& state) {
  const BlockGrid grid;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ode_grid(grid, exec_of(state)));
    benchmark::DoNotOptimize(asymptotic_grid(grid, exec_of(state)));
  }
  label(state);
}

}  // namespace

BENCHMARK(BM_BuildM)->ArgsProduct({{4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildMinv)->ArgsProduct({{4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildMRecursive)->ArgsProduct({{4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Projections)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OdeGrid)->ArgsProduct({{0}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
