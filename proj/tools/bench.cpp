// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "seating/constructions.hpp"
#include "seating/dynamics.hpp"
#include "seating/exact.hpp"
#include "seating/randomized.hpp"
#include "seating/search.hpp"

using namespace seating;

namespace {

// No stable arrangement, so the whole space is scanned.
const Profile kUnstable = pm1_path(9);

void BM_FindArrangementSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(find_arrangement_serial(kUnstable, Topology::path(9), Criterion::Stable));
}
void BM_FindArrangement(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(find_arrangement(kUnstable, Topology::path(9), Criterion::Stable));
}

void BM_CountStableSerial(benchmark::State& st) {
  const Profile p = sample_profile({9, Rational(1, 2), 1});
  for (auto _ : st) benchmark::DoNotOptimize(count_stable_serial(p, Topology::cycle(9)));
}
void BM_CountStable(benchmark::State& st) {
  const Profile p = sample_profile({9, Rational(1, 2), 1});
  for (auto _ : st) benchmark::DoNotOptimize(count_stable(p, Topology::cycle(9)));
}

void BM_ExhaustSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(exhaust_serial(5, {0, 1}, Topology::cycle(5), SearchMode::full()));
}
void BM_Exhaust(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(exhaust(5, {0, 1}, Topology::cycle(5), SearchMode::full()));
}

void BM_EnsembleSerial(benchmark::State& st) {
  SwapPolicy policy;
  policy.selection = Selection::SeededRandom;
  for (auto _ : st) benchmark::DoNotOptimize(run_ensemble_serial(abf_cycle(8), Topology::cycle(8), policy, 64, 3, 2000));
}
void BM_Ensemble(benchmark::State& st) {
  SwapPolicy policy;
  policy.selection = Selection::SeededRandom;
  for (auto _ : st) benchmark::DoNotOptimize(run_ensemble(abf_cycle(8), Topology::cycle(8), policy, 64, 3, 2000));
}

void BM_EstimateSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(estimate_expected_stable_serial(8, Rational(1, 3), 32, 9));
}
void BM_Estimate(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(estimate_expected_stable(8, Rational(1, 3), 32, 9));
}

void BM_SweepSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kclass_sweep_serial(3, 4, {0, 1}, TopologyKind::Path));
}
void BM_Sweep(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kclass_sweep(3, 4, {0, 1}, TopologyKind::Path));
}

}  // namespace

BENCHMARK(BM_FindArrangementSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FindArrangement)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CountStableSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountStable)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ExhaustSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Exhaust)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EnsembleSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Ensemble)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EstimateSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Estimate)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
