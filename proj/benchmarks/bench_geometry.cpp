#include <benchmark/benchmark.h>

#include "hc3/catalog.hpp"
#include "hc3/embeddings.hpp"
#include "hc3/perturbations.hpp"
#include "hc3/voronoi.hpp"

using namespace hc3;

static Configuration natural(Int d2) {
  SublatticeBasis l = known_sublattice(d2);
  return sublattice_configuration(l, Quotient(l.scaled(2)), d2);
}

static void BM_VoronoiCell(benchmark::State& state) {
  Configuration c = natural(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(voronoi_cell(c, {0, 0, 0}).volume);
}
BENCHMARK(BM_VoronoiCell)->Arg(2)->Arg(5)->Arg(10)->Arg(12)->Unit(benchmark::kMicrosecond);

static void BM_MinCellSearch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(min_cell_search(3, state.range(0)).best);
}
BENCHMARK(BM_MinCellSearch)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_EmbeddingClasses(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(embedding_classes(state.range(0)).size());
}
BENCHMARK(BM_EmbeddingClasses)->DenseRange(1, 7)->Unit(benchmark::kMillisecond);

static void BM_Excitations(benchmark::State& state) {
  Configuration c = build_layered(layered_family(5), "ST");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_excitations(c).excitations.size());
}
BENCHMARK(BM_Excitations)->Unit(benchmark::kMillisecond);

static void BM_SlidingScan(benchmark::State& state) {
  Configuration c = natural(state.range(0));
  SlidingFamily f = standard_sliding_family(c);
  for (auto _ : state) benchmark::DoNotOptimize(find_sliding(c, f.selectors, f.shifts).size());
}
BENCHMARK(BM_SlidingScan)->Arg(4)->Arg(5)->Arg(11)->Unit(benchmark::kMillisecond);
