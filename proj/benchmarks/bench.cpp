// Microbenchmarks for the enumeration and polynomial kernels.

#include <benchmark/benchmark.h>

#include "genocchi/brackets.hpp"
#include "genocchi/catalog.hpp"
#include "genocchi/families.hpp"
#include "genocchi/pathdiag.hpp"
#include "genocchi/seidel.hpp"
#include "genocchi/stats.hpp"

using namespace genocchi;

static void BM_GenerateXFilter(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto members = generate(Family::X, n, GenMode::Filter);
    benchmark::DoNotOptimize(members);
  }
}
BENCHMARK(BM_GenerateXFilter)->Arg(3)->Arg(4);

static void BM_GenerateXAccelerated(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto members = generate(Family::X, n, GenMode::Accelerated);
    benchmark::DoNotOptimize(members);
  }
}
BENCHMARK(BM_GenerateXAccelerated)->Arg(3)->Arg(4)->Arg(5);

static void BM_ComputeStats(benchmark::State& state) {
  auto members = generate(Family::X, 4, GenMode::Accelerated);
  std::size_t i = 0;
  for (auto _ : state) {
    StatVector st = compute_stats(members[i++ % members.size()]);
    benchmark::DoNotOptimize(st);
  }
}
BENCHMARK(BM_ComputeStats);

static void BM_MultiPolyMul(benchmark::State& state) {
  MultiPoly a = pq_bracket(MultiPoly::variable(Var::a), 6,
                           MultiPoly::variable(Var::bbar));
  MultiPoly b = pq_bracket(MultiPoly::variable(Var::abar), 7,
                           MultiPoly::variable(Var::b));
  for (auto _ : state) {
    MultiPoly c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_MultiPolyMul);

static void BM_JfracMaster(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  CatalogEntry entry = catalog("master");
  for (auto _ : state) {
    PowerSeries s = entry.expand(N);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_JfracMaster)->Arg(3)->Arg(4);

static void BM_Seidel(benchmark::State& state) {
  for (auto _ : state) {
    SeidelTriangle tri = seidel(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(tri);
  }
}
BENCHMARK(BM_Seidel)->Arg(6)->Arg(20);

static void BM_EnumerateDiagrams(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto ds = enumerate_diagrams(n);
    benchmark::DoNotOptimize(ds);
  }
}
BENCHMARK(BM_EnumerateDiagrams)->Arg(3)->Arg(4)->Arg(5);

BENCHMARK_MAIN();
