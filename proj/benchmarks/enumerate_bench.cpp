#include <benchmark/benchmark.h>

#include "midiso/canonical.hpp"
#include "midiso/enumerate.hpp"
#include "midiso/generators.hpp"
#include "midiso/theorems.hpp"

namespace {

using namespace midiso;

void BM_AllTrees(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(all_trees(n).size());
}
BENCHMARK(BM_AllTrees)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_AllConnectedGraphs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(all_connected_graphs(n).size());
}
BENCHMARK(BM_AllConnectedGraphs)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_CanonicalFormTree(benchmark::State& state) {
  const Graph t = random_tree(static_cast<int>(state.range(0)), 21);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(t));
}
BENCHMARK(BM_CanonicalFormTree)->Arg(8)->Arg(12)->Arg(16);

void BM_CanonicalFormGraph(benchmark::State& state) {
  const Graph g = random_connected_graph(static_cast<int>(state.range(0)), 0.4, 23);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormGraph)->Arg(8)->Arg(12)->Arg(16);

void BM_ExtremalTreeSweep(benchmark::State& state) {
  const std::vector<Graph> trees = all_trees(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    int agree = 0;
    for (const Graph& t : trees) agree += check_extremal_tree(t).verdict == Verdict::kPass ? 1 : 0;
    benchmark::DoNotOptimize(agree);
  }
}
BENCHMARK(BM_ExtremalTreeSweep)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace
