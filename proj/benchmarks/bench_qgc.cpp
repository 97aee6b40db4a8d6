#include <benchmark/benchmark.h>

#include "qgc/census.hpp"
#include "qgc/charfun.hpp"
#include "qgc/graph.hpp"
#include "qgc/scattering.hpp"
#include "qgc/sturm_liouville.hpp"

namespace {

using namespace qgc;

void BM_CanonicalForm(benchmark::State& state) {
  const std::vector<CombGraph> graphs = enumerate_connected(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (const CombGraph& g : graphs) benchmark::DoNotOptimize(canonical_form(g));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(graphs.size()));
}
BENCHMARK(BM_CanonicalForm)->Arg(5)->Arg(6);

void BM_EnumerateConnected(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_connected(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_EnumerateConnected)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_DiscCharPoly(benchmark::State& state) {
  const CombGraph g = complete_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(disc_char_poly(g));
}
BENCHMARK(BM_DiscCharPoly)->Arg(6)->Arg(9)->Arg(12);

void BM_CharMatrixOracle(benchmark::State& state) {
  const CombGraph g = state.range(0) == 0 ? fixture("fig2-left") : complete_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(char_matrix_oracle(g, VertexSet{0}));
}
BENCHMARK(BM_CharMatrixOracle)->Arg(0)->Arg(5)->Arg(7);

void BM_Resonances(benchmark::State& state) {
  const JostLaurent j = jost_for_lead(fixture("fig2-left"), 4);
  for (auto _ : state) benchmark::DoNotOptimize(resonances(j));
}
BENCHMARK(BM_Resonances);

void BM_IntegrateSc(benchmark::State& state) {
  const PotentialSample q = constant_potential(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(integrate_sc(q, 50.0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_IntegrateSc)->Arg(1024)->Arg(4096);

void BM_CensusGraphs(benchmark::State& state) {
  const std::vector<CombGraph> family = graph_family(6);
  for (auto _ : state) benchmark::DoNotOptimize(run_census(family, "graphs<=6", static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_CensusGraphs)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_CensusTrees(benchmark::State& state) {
  const std::vector<CombGraph> family = tree_family(9);
  for (auto _ : state) benchmark::DoNotOptimize(run_census(family, "trees<=9", 1));
}
BENCHMARK(BM_CensusTrees)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
