// Serial reference versus OpenMP paths of the data-parallel kernels.

#include <benchmark/benchmark.h>

#include <memory>

#include "eulerclass/corpus.hpp"
#include "eulerclass/equivalence.hpp"
#include "eulerclass/kernels.hpp"

using namespace eulerclass;

namespace {

// K4 with a doubled edge and a loop: 8 edges, 256 orientations.
GraphView bench_graph() {
  Multigraph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 2}, {1, 1}});
  return GraphView(std::make_shared<const Multigraph>(std::move(g)));
}

GraphView wide_graph() {
  Multigraph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}, {1, 4}, {2, 5}, {0, 2}, {3, 5},
                   {1, 5}});
  return GraphView(std::make_shared<const Multigraph>(std::move(g)));
}

Exec mode(const benchmark::State& state) { return state.range(0) ? Exec::kParallel : Exec::kSerial; }

void BM_RelatedPairs(benchmark::State& state, Relation relation) {
  GraphView v = bench_graph();
  std::vector<Orientation> all = enumerate_orientations(v);
  for (auto _ : state) benchmark::DoNotOptimize(related_pairs(v, all, relation, mode(state)));
}

void BM_RestrictionFlags(benchmark::State& state) {
  GraphView v = wide_graph();
  std::vector<Orientation> all = enumerate_orientations(v);
  for (auto _ : state)
    benchmark::DoNotOptimize(restriction_flags(v, all, Restriction::kTotallyCyclic, mode(state)));
}

void BM_ActivityTally(benchmark::State& state) {
  GraphView v = wide_graph();
  std::vector<SpanningForest> forests = spanning_forests(v);
  for (auto _ : state) benchmark::DoNotOptimize(activity_tally(v, forests, mode(state)));
}

}  // namespace

BENCHMARK_CAPTURE(BM_RelatedPairs, eulerian, Relation::kEulerian)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RelatedPairs, cut, Relation::kCut)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RelatedPairs, eulerian_cut, Relation::kEulerianCut)
    ->Arg(0)
    ->Arg(1)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RestrictionFlags)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ActivityTally)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
