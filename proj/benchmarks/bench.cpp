#include <benchmark/benchmark.h>

#include "icln/verify.hpp"

using namespace icln;

static void BM_Census5(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(census(5));
}
BENCHMARK(BM_Census5);

static void BM_Census8(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(census(8));
}
BENCHMARK(BM_Census8);

static void BM_NormalizeAll12(benchmark::State& state) {
  std::vector<NWord> words = all_nwords(12);
  for (auto _ : state)
    for (const NWord& w : words) benchmark::DoNotOptimize(normalize(w));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(words.size()));
}
BENCHMARK(BM_NormalizeAll12);

static void BM_NormalizeSemanticAll8(benchmark::State& state) {
  std::vector<NWord> words = all_nwords(8);
  for (auto _ : state)
    for (const NWord& w : words) benchmark::DoNotOptimize(normalize_semantic(w));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(words.size()));
}
BENCHMARK(BM_NormalizeSemanticAll8);

static void BM_Signature(benchmark::State& state) {
  NWord w = parse_nword("!!~!!~!p");
  for (auto _ : state) benchmark::DoNotOptimize(signature(w));
}
BENCHMARK(BM_Signature);

static void BM_Enumerate43(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_rmodels({4, 3}, 1));
}
BENCHMARK(BM_Enumerate43);

static void BM_CountermodelV(benchmark::State& state) {
  FormulaPtr f = parse_formula("!~~p -> !!~p");
  for (auto _ : state) benchmark::DoNotOptimize(find_countermodel(*f, {4, 3}));
}
BENCHMARK(BM_CountermodelV);

static void BM_CriterionLen4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_signature_criterion(4, {3, 2}));
}
BENCHMARK(BM_CriterionLen4);

BENCHMARK_MAIN();
