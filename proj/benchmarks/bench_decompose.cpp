#include <benchmark/benchmark.h>

#include <map>

#include "kdelta/kdelta.hpp"
#include "kdelta/synthetic.hpp"

namespace {

using namespace kdelta;

// n = m / 10 over a fixed time span, so the delta-incidence density stays put
// as m grows.
const TemporalGraph& graph_for(std::size_t m) {
  static std::map<std::size_t, TemporalGraph> cache;
  auto it = cache.find(m);
  if (it == cache.end()) {
    synthetic::RandomGraphParams p;
    p.nodes = m / 10;
    p.edges = m;
    p.t_max = 1'000'000;
    it = cache.emplace(m, synthetic::random_temporal_graph(p, 42)).first;
  }
  return it->second;
}

Timestamp median_iet(const TemporalGraph& g) {
  return iet_percentiles(g, {0.5}).percentiles.at(0.5);
}

void BM_Core(benchmark::State& state) {
  const auto& g = graph_for(static_cast<std::size_t>(state.range(0)));
  const Timestamp delta = median_iet(g);
  for (auto _ : state) benchmark::DoNotOptimize(kd_core_decompose(g, delta));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Truss(benchmark::State& state) {
  const auto& g = graph_for(static_cast<std::size_t>(state.range(0)));
  const Timestamp delta = median_iet(g);
  for (auto _ : state) benchmark::DoNotOptimize(kd_truss_decompose(g, delta));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Components(benchmark::State& state) {
  const auto& g = graph_for(static_cast<std::size_t>(state.range(0)));
  const Timestamp delta = median_iet(g);
  for (auto _ : state) benchmark::DoNotOptimize(delta_connected_components(g, delta));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_DeltaStats(benchmark::State& state) {
  const auto& g = graph_for(static_cast<std::size_t>(state.range(0)));
  const Timestamp delta = median_iet(g);
  for (auto _ : state) benchmark::DoNotOptimize(delta_stats(g, delta));
}

}  // namespace

BENCHMARK(BM_Core)->RangeMultiplier(4)->Range(1 << 14, 1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Truss)->RangeMultiplier(4)->Range(1 << 14, 1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Components)->RangeMultiplier(4)->Range(1 << 14, 1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeltaStats)->RangeMultiplier(4)->Range(1 << 14, 1 << 20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
