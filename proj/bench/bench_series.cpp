#include <benchmark/benchmark.h>

#include "wgcount/counting.hpp"
#include "wgcount/graph.hpp"

namespace {

void BM_SeriesParallel(benchmark::State& state, const char* dsl) {
  const wg::Graph g = wg::family(dsl);
  for (auto _ : state) benchmark::DoNotOptimize(wg::series(g, static_cast<std::size_t>(state.range(0))));
}

void BM_SeriesSerial(benchmark::State& state, const char* dsl) {
  const wg::Graph g = wg::family(dsl);
  for (auto _ : state) benchmark::DoNotOptimize(wg::series_serial(g, static_cast<std::size_t>(state.range(0))));
}

void BM_Count(benchmark::State& state, const char* dsl, wg::CountMethod method) {
  const wg::Graph g = wg::family(dsl);
  wg::CountLimits limits;
  limits.brute_ceiling = 1e9;
  for (auto _ : state) benchmark::DoNotOptimize(wg::count(g, state.range(0), method, limits));
}

}  // namespace

BENCHMARK_CAPTURE(BM_SeriesParallel, hypercube3, "hypercube:3")->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SeriesSerial, hypercube3, "hypercube:3")->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SeriesParallel, octahedron, "octahedron")->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SeriesSerial, octahedron, "octahedron")->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Count, cycle6_brute, "cycle:6", wg::CountMethod::kBrute)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Count, cycle6_elim, "cycle:6", wg::CountMethod::kElim)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
