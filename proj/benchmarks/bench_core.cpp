#include <benchmark/benchmark.h>

#include "phaseshift/hierarchy.hpp"
#include "phaseshift/partitions.hpp"
#include "phaseshift/potential.hpp"
#include "phaseshift/refwave.hpp"
#include "phaseshift/series.hpp"

using namespace phaseshift;

namespace {

Grid bench_grid(const benchmark::State& state) {
  return Grid(5.0, static_cast<std::size_t>(state.range(0)));
}

void BM_SolveReference(benchmark::State& state) {
  const Grid g = bench_grid(state);
  const PotentialSpec V(GaussianSum{{{1.0, 0.3, 0.5}}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_reference(V, 1.0, g));
  }
}
BENCHMARK(BM_SolveReference)->Arg(1001)->Arg(4001)->Arg(16001);

void BM_ApplyJ(benchmark::State& state) {
  const Grid g = bench_grid(state);
  const ReferenceWave ref = analytic_free_reference(1.0, g);
  const EvaluatedPotential U = evaluate_potential(PotentialSpec::barrier(0.0, 1.0, 1.0), g);
  const ComplexGridFunction one = ComplexGridFunction::constant(g, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_J(ref, U, one));
  }
}
BENCHMARK(BM_ApplyJ)->Arg(1001)->Arg(4001)->Arg(16001);

void BM_Hierarchy(benchmark::State& state) {
  const Grid g(5.0, 4001);
  const ReferenceWave ref = analytic_free_reference(1.0, g);
  const EvaluatedPotential U = evaluate_potential(PotentialSpec::barrier(0.0, 1.0, 1.0), g);
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_hierarchy(ref, U, order));
  }
}
BENCHMARK(BM_Hierarchy)->Arg(4)->Arg(10)->Arg(20);

void BM_EnumeratePartitions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_partitions(n));
  }
}
BENCHMARK(BM_EnumeratePartitions)->Arg(4)->Arg(12)->Arg(20);

void BM_AssembleSeries(benchmark::State& state) {
  const Grid g(5.0, 4001);
  const ReferenceWave ref = analytic_free_reference(1.0, g);
  const EvaluatedPotential U = evaluate_potential(PotentialSpec::barrier(0.0, 1.0, 1.0), g);
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble_series(ref, U, order));
  }
}
BENCHMARK(BM_AssembleSeries)->Arg(4)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
