#include <benchmark/benchmark.h>

#include "homext/age.hpp"
#include "homext/canonical.hpp"
#include "homext/corpus.hpp"
#include "homext/generators.hpp"
#include "homext/properties.hpp"

using namespace homext;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void BM_ClassifyCorpus(benchmark::State& state) {
  static const std::vector<Graph> graphs = enumerate_graphs_up_to(6);
  for (auto _ : state) benchmark::DoNotOptimize(classify_corpus(graphs, mode(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs.size()));
}

void BM_ComputeAge(benchmark::State& state) {
  static const Truncation t = Truncation::of(rs_graph(3), 30);
  for (auto _ : state) benchmark::DoNotOptimize(compute_age(t, 5, kDefaultEmbeddingCap, mode(state)));
}

void BM_ExtensionAxioms(benchmark::State& state) {
  static const Graph g = oracle_truncate(rado_bit(), 1024);
  for (auto _ : state) benchmark::DoNotOptimize(check_extension_axioms(g, 10, mode(state)));
}

}  // namespace

// Argument 0 runs the serial reference, 1 the OpenMP kernel.
BENCHMARK(BM_ClassifyCorpus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComputeAge)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtensionAxioms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
