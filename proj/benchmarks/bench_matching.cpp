#include <benchmark/benchmark.h>

#include "matchtime/lengths.hpp"
#include "matchtime/markov.hpp"
#include "matchtime/matching.hpp"

using namespace matchtime;

namespace {

SymbolSequence chain(std::size_t n) { return simulate(MarkovChainSpec(0.6), n, 1); }

void BM_Simulate(benchmark::State& state) {
  const MarkovChainSpec spec(0.6);
  Rng rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate(spec, static_cast<std::size_t>(state.range(0)), rng));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Simulate)->RangeMultiplier(10)->Range(1000, 1000000);

void BM_MatchingForward(benchmark::State& state) {
  const auto x = chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(matching_time_forward(x));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MatchingForward)->RangeMultiplier(10)->Range(1000, 1000000);

void BM_MatchingReversed(benchmark::State& state) {
  const auto x = chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(matching_time_reversed(x));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MatchingReversed)->RangeMultiplier(10)->Range(1000, 1000000);

void BM_NaiveForward(benchmark::State& state) {
  const auto x = chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(naive_matching_time_forward(x.symbols()));
  }
}
BENCHMARK(BM_NaiveForward)->RangeMultiplier(10)->Range(100, 10000);

void BM_LengthSampler(benchmark::State& state) {
  const LengthSampler sampler(LengthModel{});
  Rng rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sampler(rng));
  }
}
BENCHMARK(BM_LengthSampler);

}  // namespace

BENCHMARK_MAIN();
