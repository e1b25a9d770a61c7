#include "ksb/clp.hpp"
#include "ksb/distance_set.hpp"
#include "ksb/intersective.hpp"
#include "ksb/oracle.hpp"
#include "ksb/spectrum.hpp"
#include "ksb/weights.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace ksb;

void BM_WeightedSpectrum(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const WeightScheme scheme = consecutive_scheme(n, 1, 3);
    for (auto _ : state) benchmark::DoNotOptimize(weighted_spectrum(n, scheme));
}
BENCHMARK(BM_WeightedSpectrum)->Arg(10)->Arg(30)->Arg(100);

void BM_OracleDiameter(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DistanceSet allowed = DistanceSet::upto(n, 4);
    for (auto _ : state) benchmark::DoNotOptimize(oracle_exact(n, allowed));
}
BENCHMARK(BM_OracleDiameter)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_OraclePair(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DistanceSet allowed(n, {3, 4});
    for (auto _ : state) benchmark::DoNotOptimize(oracle_exact(n, allowed));
}
BENCHMARK(BM_OraclePair)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_KleitmanRank(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const F2Matrix m = build_kleitman_matrix(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(f2_rank(m));
}
BENCHMARK(BM_KleitmanRank)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_PairingCount(benchmark::State& state) {
    const FpParams params{5, static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(pairing_box_count(params));
}
BENCHMARK(BM_PairingCount)->Arg(10)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
