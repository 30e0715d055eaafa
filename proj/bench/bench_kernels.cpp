// Serial reference vs OpenMP kernel, same inputs.

#include "idealarr/arrangement.hpp"
#include "idealarr/certify.hpp"

#include <benchmark/benchmark.h>

using namespace idealarr;

namespace {

const RootSystem& system_for(std::int64_t code) {
    switch (code) {
        case 0: return *shared_root_system('F', 4);
        case 1: return *shared_root_system('E', 6);
        case 2: return *shared_root_system('E', 7);
        default: return *shared_root_system('E', 8);
    }
}

void label(benchmark::State& state) { state.SetLabel(system_for(state.range(0)).label()); }

void BM_ideals_serial(benchmark::State& state) {
    const auto& rs = system_for(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(all_ideals(rs));
    label(state);
}

void BM_ideals_omp(benchmark::State& state) {
    const auto& rs = system_for(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(all_ideals_parallel(rs));
    label(state);
}

void BM_certify_serial(benchmark::State& state) {
    const auto& rs = system_for(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_certified_serial(rs));
    label(state);
}

void BM_certify_omp(benchmark::State& state) {
    const auto& rs = system_for(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_certified(rs));
    label(state);
}

// Full reflection arrangements: F4 and E6.
void BM_lattice_serial(benchmark::State& state) {
    const auto arr = from_ideal(system_for(state.range(0)), Ideal{});
    for (auto _ : state) benchmark::DoNotOptimize(build_lattice_serial(arr));
    label(state);
}

void BM_lattice_omp(benchmark::State& state) {
    const auto arr = from_ideal(system_for(state.range(0)), Ideal{});
    for (auto _ : state) benchmark::DoNotOptimize(build_lattice(arr));
    label(state);
}

}  // namespace

BENCHMARK(BM_ideals_serial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ideals_omp)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_certify_serial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_certify_omp)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_lattice_serial)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_lattice_omp)->DenseRange(0, 1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
