#include "crosscap/generators.hpp"
#include "crosscap/jones.hpp"
#include "crosscap/state_kernels.hpp"
#include "crosscap/surfaces.hpp"

#include <benchmark/benchmark.h>

using namespace crosscap;

namespace {

// P(n,n,n) has 3n crossings; n = 4..6 gives 12..18.
Diagram sample(std::int64_t n) { return pretzel({static_cast<int>(n), static_cast<int>(n), static_cast<int>(n)}); }

void spectrum(benchmark::State& state, Execution exec) {
    const auto d = sample(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(state_spectrum(d, exec));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << d.crossing_count()));
}

void max_scan(benchmark::State& state, Execution exec) {
    const auto d = sample(state.range(0));
    std::vector<StateMask> excluded;
    for (const auto& s : seifert_states(d)) excluded.push_back(s.mask());
    for (auto _ : state) benchmark::DoNotOptimize(scan_max_states(d, excluded, exec));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << d.crossing_count()));
}

void BM_SpectrumSerial(benchmark::State& s) { spectrum(s, Execution::Serial); }
void BM_SpectrumParallel(benchmark::State& s) { spectrum(s, Execution::Parallel); }
void BM_MaxScanSerial(benchmark::State& s) { max_scan(s, Execution::Serial); }
void BM_MaxScanParallel(benchmark::State& s) { max_scan(s, Execution::Parallel); }

void BM_BracketSweep(benchmark::State& state) {
    const auto d = sample(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(bracket(d, 64));
}

}  // namespace

BENCHMARK(BM_SpectrumSerial)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpectrumParallel)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaxScanSerial)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaxScanParallel)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BracketSweep)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
