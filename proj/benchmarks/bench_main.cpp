// Microbenchmarks for the counting and linear-algebra hot paths. Run with
//   ./build/benchmarks/rigidlab_bench [--benchmark_filter=...]
#include <benchmark/benchmark.h>

#include <rigidlab/census.hpp>
#include <rigidlab/groups.hpp>
#include <rigidlab/hypergraph.hpp>
#include <rigidlab/linalg.hpp>
#include <rigidlab/metric.hpp>
#include <rigidlab/pointset.hpp>
#include <rigidlab/rigidity.hpp>

namespace {

using namespace rigidlab;

void BM_CensusGridK3(benchmark::State& state) {
  const Metric m = parse_metric("euclid_sq", 2);
  const Hypergraph g = complete_graph(3);
  const PointSet P = grid(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(census(m, g, P).distinct_count);
  state.SetComplexityN(P.size());
}
BENCHMARK(BM_CensusGridK3)->Arg(3)->Arg(4)->Arg(5)->Arg(6)->Complexity();

void BM_CensusDotCircleK2(benchmark::State& state) {
  const Metric m = parse_metric("dot", 2);
  const Hypergraph g = complete_graph(2);
  const PointSet P = circle_rat(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(census(m, g, P).distinct_count);
}
BENCHMARK(BM_CensusDotCircleK2)->Arg(16)->Arg(32)->Arg(64);

void BM_EnergyEuclid(benchmark::State& state) {
  const TransformGroup G = parse_group("euclid", 2);
  const PointSet P = grid(3, 2);
  const int v = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(energy(G, v, P).energy);
}
BENCHMARK(BM_EnergyEuclid)->Arg(1)->Arg(2);

void BM_RichTransformsSE2(benchmark::State& state) {
  const TransformGroup G = parse_group("se2", 2);
  const PointSet P = grid(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(rich_transformations(G, P, 2).class_count);
}
BENCHMARK(BM_RichTransformsSE2)->Arg(2)->Arg(3);

void BM_RankExactJacobian(benchmark::State& state) {
  const Metric m = parse_metric("euclid_sq", 2);
  const int n = static_cast<int>(state.range(0));
  const Hypergraph g = complete_graph(n);
  const PointSet P = random_generic(2, n, 1000000, 7);
  Realisation p;
  p.d = 2;
  p.points = P.points;
  const MatQ J = jacobian(m, g, p);
  for (auto _ : state) benchmark::DoNotOptimize(rank_exact(J));
}
BENCHMARK(BM_RankExactJacobian)->Arg(4)->Arg(6)->Arg(8);

void BM_GenericRigidity(benchmark::State& state) {
  const Metric m = parse_metric("euclid_sq", 2);
  const Hypergraph g = complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_g_rigid(m, g, 5, 7).rigid);
}
BENCHMARK(BM_GenericRigidity)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
