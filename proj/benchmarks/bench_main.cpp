#include <benchmark/benchmark.h>

#include "satnum/canonical.hpp"
#include "satnum/constructions.hpp"
#include "satnum/embedding.hpp"
#include "satnum/enumerate.hpp"
#include "satnum/generators.hpp"
#include "satnum/oracle.hpp"
#include "satnum/saturation.hpp"

namespace {

using namespace satnum;

// Saturation check of the double-star construction; range(0) is n.
void BM_DoubleStarSaturation(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = saturated_double_star(4, 5, n).graph;
  const EmbeddingSearch search(double_star(4, 5));
  for (auto _ : state) benchmark::DoNotOptimize(is_h_saturated(g, search).is_saturated);
  state.counters["non_edges"] = static_cast<double>(n * (n - 1) / 2 - g.size());
}
BENCHMARK(BM_DoubleStarSaturation)->Arg(18)->Arg(60)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_ShortySaturation(benchmark::State& state) {
  const auto g = saturated_shorty(3, static_cast<std::size_t>(state.range(0))).graph;
  const EmbeddingSearch search(caterpillar_p5(2));
  for (auto _ : state) benchmark::DoNotOptimize(is_h_saturated(g, search).is_saturated);
}
BENCHMARK(BM_ShortySaturation)->Arg(30)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_SaturationThreads(benchmark::State& state) {
  const auto g = saturated_double_star(4, 5, 200).graph;
  const EmbeddingSearch search(double_star(4, 5));
  const SaturationOptions options{static_cast<unsigned>(state.range(0)), true};
  for (auto _ : state) benchmark::DoNotOptimize(is_h_saturated(g, search, options).is_saturated);
}
BENCHMARK(BM_SaturationThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_CanonicalForm(benchmark::State& state) {
  const auto sub = relabel(gen::circulant(9, {1, 2}), std::vector<Vertex>{4, 7, 0, 2, 8, 1, 5, 3, 6});
  const Graph& target = state.range(0) == 0 ? sub : gen::complete_multipartite({3, 3, 3});
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(target));
}
BENCHMARK(BM_CanonicalForm)->Arg(0)->Arg(1);

void BM_EnumerateOrder(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    EdgeLevelEnumerator levels(n);
    std::size_t total = levels.level().size();
    while (levels.advance()) total += levels.level().size();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_EnumerateOrder)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_BruteForceSat(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  SatOptions options;
  options.audit = true;
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_sat(n, double_star(2, 3), options).sat_value);
}
BENCHMARK(BM_BruteForceSat)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
