#include <benchmark/benchmark.h>

#include "homtopo/equivariant.hpp"
#include "homtopo/folds.hpp"
#include "homtopo/formulas.hpp"
#include "homtopo/homcx.hpp"
#include "homtopo/morse.hpp"

using namespace homtopo;

static void BM_BuildKmn(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<int>(state.range(0)));
  const Graph h = complete_graph(static_cast<int>(state.range(1)));
  std::size_t cells = 0;
  for (auto _ : state) {
    const HomComplex c = HomComplex::build(g, h);
    cells = c.size();
    benchmark::DoNotOptimize(cells);
  }
  state.counters["cells"] = static_cast<double>(cells);
}
BENCHMARK(BM_BuildKmn)->Args({2, 5})->Args({3, 5})->Args({3, 6})->Args({4, 6})->Unit(benchmark::kMillisecond);

static void BM_BettiKmn(benchmark::State& state) {
  const HomComplex c =
      HomComplex::build(complete_graph(static_cast<int>(state.range(0))), complete_graph(static_cast<int>(state.range(1))));
  const CellPoset p = c.face_poset();
  for (auto _ : state) benchmark::DoNotOptimize(betti_gf2(p));
  state.counters["cells"] = static_cast<double>(p.size());
}
BENCHMARK(BM_BettiKmn)->Args({2, 5})->Args({3, 5})->Args({3, 6})->Args({4, 6})->Unit(benchmark::kMillisecond);

static void BM_CycleTarget(benchmark::State& state) {
  const Graph g = cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(betti_gf2(HomComplex::build(g, complete_graph(3)).face_poset()));
}
BENCHMARK(BM_CycleTarget)->DenseRange(5, 9, 2)->Unit(benchmark::kMillisecond);

static void BM_KmnMatching(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(verify_kmn(m, n));
}
BENCHMARK(BM_KmnMatching)->Args({3, 5})->Args({4, 6})->Unit(benchmark::kMillisecond);

static void BM_ColoringBound(benchmark::State& state) {
  const Graph g = state.range(0) == 0 ? petersen_graph() : complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(coloring_bound(g, 2));
}
BENCHMARK(BM_ColoringBound)->Arg(4)->Arg(5)->Arg(0)->Unit(benchmark::kMillisecond);

static void BM_Core(benchmark::State& state) {
  const Graph g = kneser_graph(2, 5);
  const Graph big = complement(disjoint_union(g, path_graph(static_cast<int>(state.range(0)))), false);
  for (auto _ : state) benchmark::DoNotOptimize(irreducible_core(big));
}
BENCHMARK(BM_Core)->Arg(4)->Arg(16);

static void BM_Wedge(benchmark::State& state) {
  const auto method = static_cast<WedgeMethod>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(f_wedge(12, 40, method));
}
BENCHMARK(BM_Wedge)->DenseRange(0, 2);
BENCHMARK_MAIN();
