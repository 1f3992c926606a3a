#include <benchmark/benchmark.h>

#include "ppdiag/dynamics.hpp"
#include "ppdiag/ppd.hpp"
#include "ppdiag/tpd.hpp"

using namespace ppdiag;

static void BM_PowerTable(benchmark::State& state) {
    PrimeModulus p(7919);
    for (auto _ : state) {
        auto table = power_table(static_cast<uint64_t>(state.range(0)), p);
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_PowerTable)->Arg(2)->Arg(12)->Arg(1000003);

static void BM_ScanColumn(benchmark::State& state) {
    PrimeModulus p(static_cast<uint64_t>(state.range(0)));
    PeriodicScanner scanner(2, p);
    uint64_t c = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(scanner.scan(c).count());
        c = (c + 1) % p.value();
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ScanColumn)->Arg(197)->Arg(1009)->Arg(7919)->Complexity(benchmark::oN);

static void BM_ReferenceScanColumn(benchmark::State& state) {
    PrimeModulus p(static_cast<uint64_t>(state.range(0)));
    uint64_t c = 0;
    for (auto _ : state) {
        SystemParams params(2, c, p);
        benchmark::DoNotOptimize(periodic_points_naive(params).members.count());
        c = (c + 1) % p.value();
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ReferenceScanColumn)->Arg(197)->Arg(1009)->Complexity(benchmark::oNSquared);

static void BM_BuildPpd(benchmark::State& state) {
    PrimeModulus p(static_cast<uint64_t>(state.range(0)));
    for (auto _ : state) {
        PpdGrid grid = build_ppd(2, p);
        benchmark::DoNotOptimize(grid.count());
    }
}
BENCHMARK(BM_BuildPpd)->Arg(197)->Arg(1009)->Arg(7919)->Unit(benchmark::kMillisecond);

static void BM_PerCount(benchmark::State& state) {
    PrimeModulus p(static_cast<uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(per_count(12, p));
}
BENCHMARK(BM_PerCount)->Arg(1009)->Arg(7919)->Unit(benchmark::kMillisecond);

static void BM_TpdSweep(benchmark::State& state) {
    for (auto _ : state) {
        auto records = tpd_sweep(2, static_cast<uint64_t>(state.range(0)));
        benchmark::DoNotOptimize(records);
    }
}
BENCHMARK(BM_TpdSweep)->Arg(50)->Arg(150)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
