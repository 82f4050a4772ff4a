// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <vector>

#include "spectral_bounds/kernels.hpp"

namespace kernels = spectral_bounds::kernels;

namespace {

const std::vector<double> kSquare = {1.0, 1.0};
const std::vector<double> kFiveCube = {1.0, 1.0, 1.0, 1.0, 1.0};

void BM_BoxLatticeSquareSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::box_lattice_serial(kSquare, 1, static_cast<double>(state.range(0)), 10'000'000));
}

void BM_BoxLatticeSquareParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::box_lattice_parallel(kSquare, 1, static_cast<double>(state.range(0)), 10'000'000));
}

void BM_BoxLatticeFiveCubeSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::box_lattice_serial(kFiveCube, 0, static_cast<double>(state.range(0)), 10'000'000));
}

void BM_BoxLatticeFiveCubeParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::box_lattice_parallel(kFiveCube, 0, static_cast<double>(state.range(0)), 10'000'000));
}

void BM_ZeroTablesSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::zero_tables_serial(spectral_bounds::ZeroKind::Function, static_cast<double>(state.range(0))));
}

void BM_ZeroTablesParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::zero_tables_parallel(spectral_bounds::ZeroKind::Function, static_cast<double>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_BoxLatticeSquareSerial)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoxLatticeSquareParallel)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoxLatticeFiveCubeSerial)->Arg(2000)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoxLatticeFiveCubeParallel)->Arg(2000)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ZeroTablesSerial)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ZeroTablesParallel)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
