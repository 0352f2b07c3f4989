#include <benchmark/benchmark.h>

#include "hc3/catalog.hpp"
#include "hc3/packing_solver.hpp"

using namespace hc3;

static void BM_MaxPackingCube(benchmark::State& state) {
  Quotient q = Quotient::cube(state.range(0));
  Int d2 = state.range(1);
  SolverOptions o;
  o.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(max_packing(q, d2, o).optimum);
}
BENCHMARK(BM_MaxPackingCube)->Args({4, 4})->Args({4, 8})->Args({6, 3})->Args({6, 5})->Unit(benchmark::kMillisecond);

static void BM_CountOptimaCube(benchmark::State& state) {
  Quotient q = Quotient::cube(state.range(0));
  Int d2 = state.range(1);
  SolverOptions o;
  o.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(count_optima(q, d2, false, o));
}
BENCHMARK(BM_CountOptimaCube)->Args({4, 4})->Args({4, 12})->Unit(benchmark::kMillisecond);

static void BM_DoubledCatalogCell(benchmark::State& state) {
  Int d2 = state.range(0);
  Quotient q(known_sublattice(d2).scaled(2));
  for (auto _ : state) benchmark::DoNotOptimize(max_packing(q, d2).optimum);
}
BENCHMARK(BM_DoubledCatalogCell)->Arg(2)->Arg(3)->Arg(5)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_ExclusionGraph(benchmark::State& state) {
  Quotient q = Quotient::cube(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_exclusion_graph(q, 5).edge_count());
}
BENCHMARK(BM_ExclusionGraph)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);
