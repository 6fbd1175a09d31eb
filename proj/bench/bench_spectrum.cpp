// Parallel enumeration against the serial reference.
#include <benchmark/benchmark.h>

#include "diracbox/box1d.hpp"
#include "diracbox/box3d.hpp"

using namespace diracbox;

namespace {

void BM_Enumerate3D(benchmark::State& state)
{
    const BoxGeometry g({0.5, 1.0, 2.0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_spectrum(g, static_cast<int>(state.range(0))));
    }
}

void BM_Enumerate3DSerial(benchmark::State& state)
{
    const BoxGeometry g({0.5, 1.0, 2.0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_spectrum_serial(g, static_cast<int>(state.range(0))));
    }
}

// Cubic boxes take the multiset shortcut in the parallel path only.
void BM_EnumerateCube(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_spectrum(BoxGeometry::cube(1.0), static_cast<int>(state.range(0))));
    }
}

void BM_EnumerateCubeSerial(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            enumerate_spectrum_serial(BoxGeometry::cube(1.0), static_cast<int>(state.range(0))));
    }
}

void BM_Spectrum1D(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(spectrum_1d(1.0, static_cast<int>(state.range(0))));
    }
}

void BM_Spectrum1DSerial(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(spectrum_1d_serial(1.0, static_cast<int>(state.range(0))));
    }
}

} // namespace

BENCHMARK(BM_Enumerate3D)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumerate3DSerial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateCube)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateCubeSerial)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Spectrum1D)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Spectrum1DSerial)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
