#include "tsurf/homology.hpp"
#include "tsurf/monodromy.hpp"
#include "tsurf/pipeline.hpp"
#include "tsurf/transverse.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace tsurf;

static void BM_ClassifyWollmilchsau(benchmark::State &state)
{
  AnalysisBounds bounds;
  bounds.direction_bound = state.range(0);
  bounds.parallel = false;
  for (auto _ : state)
    benchmark::DoNotOptimize(classify_surface(wollmilchsau(), bounds));
}
BENCHMARK(BM_ClassifyWollmilchsau)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_PeriodicDecomposition(benchmark::State &state)
{
  auto o = wollmilchsau();
  for (auto _ : state)
    benchmark::DoNotOptimize(periodic_decomposition(o, {3, 5}));
}
BENCHMARK(BM_PeriodicDecomposition);

static void BM_AdaptedBasis(benchmark::State &state)
{
  auto d = horizontal_decomposition(wollmilchsau());
  for (auto _ : state)
    benchmark::DoNotOptimize(adapted_basis(d));
}
BENCHMARK(BM_AdaptedBasis);

static void BM_EnumerateCase6(benchmark::State &state)
{
  auto stratum = make_stratum({1, 1, 1, 1});
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_diagrams(stratum, DiagramShape::Case6));
}
BENCHMARK(BM_EnumerateCase6)->Unit(benchmark::kMillisecond);

static void BM_MonodromyClosure(benchmark::State &state)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(monodromy_report(wollmilchsau()));
}
BENCHMARK(BM_MonodromyClosure)->Unit(benchmark::kMillisecond);

static void BM_Case4AWitness(benchmark::State &state)
{
  std::mt19937_64 rng(1);
  std::vector<FlatSurfaceNet> nets;
  for (int i = 0; i < 64; ++i)
    nets.push_back(sample_case4a_net(rng, 20));
  std::size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(find_crossing_cylinder(nets[i++ % nets.size()], TransverseCase::Case4A));
}
BENCHMARK(BM_Case4AWitness);

static void BM_WindowFeasible(benchmark::State &state)
{
  WindowConstraint c{rat(1, 3), rat(1, 4), 0, rat(1, 4)};
  for (auto _ : state)
    benchmark::DoNotOptimize(window_feasible(c));
}
BENCHMARK(BM_WindowFeasible);

BENCHMARK_MAIN();
