#include <benchmark/benchmark.h>

#include "kirchhoff/er_model.hpp"
#include "kirchhoff/graph.hpp"
#include "kirchhoff/spectral.hpp"
#include "kirchhoff/sync.hpp"

using namespace kirchhoff;

namespace {

void BM_SampleEr(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Graph g = sample_er({n, 0.5, seed++});
    benchmark::DoNotOptimize(g.edge_count());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SampleEr)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_TracePinv(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = sample_er({n, 0.5, 7});
  const Laplacian lap = build_laplacian(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(trace_pinv(lap));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TracePinv)->RangeMultiplier(2)->Range(64, 1024)->Complexity()
    ->Unit(benchmark::kMillisecond);

void BM_PseudoInverse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = sample_er({n, 0.5, 7});
  const Laplacian lap = build_laplacian(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pseudo_inverse(lap).matrix);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PseudoInverse)->RangeMultiplier(2)->Range(64, 512)->Complexity()
    ->Unit(benchmark::kMillisecond);

// One full experiment realization: sample, eigensolve, X_n, E_n flag.
void BM_Realization(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const double p = 0.5;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const Graph g = sample_er({n, p, seed++});
    const auto spectrum = symmetric_eigenvalues(build_laplacian(g).matrix);
    const double xn = p * trace_pinv_from_spectrum(spectrum);
    const bool en =
        l1_operator_norm_from_spectrum(spectrum.eigenvalues, p) <= en_threshold(n, p);
    benchmark::DoNotOptimize(xn);
    benchmark::DoNotOptimize(en);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Realization)->RangeMultiplier(2)->Range(100, 800)->Complexity()
    ->Unit(benchmark::kMillisecond);

void BM_MleEstimate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 1;
  Graph g = sample_er({n, 0.5, seed});
  while (!is_connected(g)) g = sample_er({n, 0.5, ++seed});
  const auto problem = sample_sync_problem(g, 2, 1.0, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mle_estimate(problem).residual_sq);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MleEstimate)->RangeMultiplier(2)->Range(16, 256)->Complexity()
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
