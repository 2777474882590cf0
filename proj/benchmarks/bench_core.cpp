#include "bgossip/bgossip.hpp"

#include <benchmark/benchmark.h>

using namespace bgossip;

namespace {

Graph ring(int n) { return build_named_graph(NamedFamily::kRing, std::vector<int>{n}); }

AlgoParams params_for(int64_t algo) { return algo == 0 ? AlgoParams::bga(0.5) : AlgoParams::cbga(0.5, 1.0 / 3.0); }

void BM_SamplerStep(benchmark::State& state) {
  const Graph g = ring(static_cast<int>(state.range(0)));
  StepSampler sampler(g, params_for(state.range(1)));
  Rng rng(1);
  std::vector<double> x(g.node_count(), 0.0);
  x[0] = 1.0;
  for (auto _ : state) {
    sampler.step(rng, x);
    benchmark::DoNotOptimize(x.data());
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SamplerStep)->Args({100, 0})->Args({100, 1})->Args({1000, 0})->Args({1000, 1});

void BM_RunToConsensus(benchmark::State& state) {
  const Graph g = ring(30);
  const AlgoParams params = params_for(state.range(0));
  uint64_t trial = 0;
  for (auto _ : state) {
    Rng rng = SeedPolicy(1).trial_rng(trial++);
    std::vector<double> x(30);
    for (double& v : x) v = standard_normal(rng);
    benchmark::DoNotOptimize(run_to_consensus(g, params, x, rng, {}));
  }
}
BENCHMARK(BM_RunToConsensus)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_LyapunovApply(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const Graph g = build_named_graph(NamedFamily::kTorus, std::vector<int>{side, side});
  const LyapunovOperator op(g, params_for(state.range(1)));
  const Matrix x = omega(g.node_count());
  for (auto _ : state) benchmark::DoNotOptimize(op.apply(x));
}
BENCHMARK(BM_LyapunovApply)->Args({5, 0})->Args({5, 1})->Args({10, 0})->Args({10, 1})->Unit(benchmark::kMicrosecond);

void BM_MsaGeneric(benchmark::State& state) {
  const Graph g = ring(static_cast<int>(state.range(0)));
  const AlgoParams params = params_for(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(msa_matrix_generic(g, params));
}
BENCHMARK(BM_MsaGeneric)->Args({100, 0})->Args({100, 1})->Args({400, 1})->Unit(benchmark::kMillisecond);

void BM_MsaRingFast(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(msa_ring_cbga(n, 0.5, 1.0 / 3.0));
}
BENCHMARK(BM_MsaRingFast)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_InvariantVector(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Matrix m = msa_ring_cbga(n, 0.5, 1.0 / 3.0).M();
  InvariantOptions o;
  o.method = static_cast<InvariantMethod>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(invariant_vector(m, o));
}
BENCHMARK(BM_InvariantVector)
    ->Args({200, static_cast<int>(InvariantMethod::kEigen)})
    ->Args({200, static_cast<int>(InvariantMethod::kLinearSolve)})
    ->Unit(benchmark::kMillisecond);

void BM_CirculantEigenvalues(benchmark::State& state) {
  const CyclicGroup grp(std::vector<int>{static_cast<int>(state.range(0))});
  Vector v = Vector::Zero(grp.order());
  v[1] = v[grp.order() - 1] = 0.25;
  v[0] = 0.5;
  const GeneratingVector pi(grp, v);
  for (auto _ : state) benchmark::DoNotOptimize(circulant_eigenvalues(pi));
}
BENCHMARK(BM_CirculantEigenvalues)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);

void BM_ReachableSpaceRate(benchmark::State& state) {
  const Graph g = build_rgg(static_cast<int>(state.range(0)), 0.45, 4, true).graph;
  AnalyzeOptions o;
  o.rate_method = RateMethod::kReachableSpaceExact;
  o.bias_method = BiasMethod::kNone;
  o.compute_bounds = false;
  for (auto _ : state) benchmark::DoNotOptimize(analyze(g, AlgoParams::bga(0.5), o));
}
BENCHMARK(BM_ReachableSpaceRate)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
