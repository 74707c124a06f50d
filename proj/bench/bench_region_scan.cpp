// Serial reference against the OpenMP region scan, per catalog set.
//   ./bench_region_scan --benchmark_filter=octahedron
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "qproj/catalog.hpp"
#include "qproj/classicality.hpp"

namespace {

constexpr double kStep = 0.05;
constexpr double kSigma = 1.0;

void scan_serial(benchmark::State& state, qproj::CatalogId id) {
    const qproj::MeasurementSet set = qproj::catalog(id);
    std::size_t points = 0;
    for (auto _ : state) {
        const qproj::RegionScan scan = qproj::region_scan_serial(set, kSigma, kStep);
        benchmark::DoNotOptimize(scan.classical_fraction);
        points = scan.points.size();
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * points));
}

void scan_parallel(benchmark::State& state, qproj::CatalogId id) {
    const qproj::MeasurementSet set = qproj::catalog(id);
    std::size_t points = 0;
    for (auto _ : state) {
        const qproj::RegionScan scan = qproj::region_scan(set, kSigma, kStep);
        benchmark::DoNotOptimize(scan.classical_fraction);
        points = scan.points.size();
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * points));
    state.counters["threads"] = omp_get_max_threads();
}

BENCHMARK_CAPTURE(scan_serial, tetrahedron, qproj::CatalogId::Tetrahedron)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(scan_parallel, tetrahedron, qproj::CatalogId::Tetrahedron)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(scan_serial, octahedron, qproj::CatalogId::Octahedron)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(scan_parallel, octahedron, qproj::CatalogId::Octahedron)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(scan_serial, square, qproj::CatalogId::Square)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(scan_parallel, square, qproj::CatalogId::Square)->Unit(benchmark::kMillisecond)->UseRealTime();

} // namespace

BENCHMARK_MAIN();
