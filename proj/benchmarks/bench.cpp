#include <benchmark/benchmark.h>

#include "graphlets/distances.hpp"
#include "graphlets/generators.hpp"
#include "graphlets/quasirandom.hpp"
#include "graphlets/rank_decomp.hpp"
#include "graphlets/spectral.hpp"

using namespace graphlets;

namespace {

Graph dense_random(int n, std::uint64_t seed) {
  return chung_lu(Eigen::VectorXd::Constant(n, n / 4.0), seed);
}

void bm_spectrum(benchmark::State& state) {
  const Graph g = dense_random(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(g));
}
BENCHMARK(bm_spectrum)->Arg(64)->Arg(256);

void bm_spectral_certificate(benchmark::State& state) {
  const Graph g = dense_random(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(qr_epsilon_spectral(g));
}
BENCHMARK(bm_spectral_certificate)->Arg(64)->Arg(256);

void bm_exact_discrepancy(benchmark::State& state) {
  const Graph g = dense_random(12, 3);
  for (auto _ : state) benchmark::DoNotOptimize(qr_epsilon_discrepancy(g));
}
BENCHMARK(bm_exact_discrepancy);

void bm_sampled_discrepancy(benchmark::State& state) {
  const Graph g = dense_random(64, 4);
  DiscMode mode;
  mode.exact = false;
  mode.samples = 2000;
  for (auto _ : state) benchmark::DoNotOptimize(qr_epsilon_discrepancy(g, mode));
}
BENCHMARK(bm_sampled_discrepancy);

void bm_rank2_decompose(benchmark::State& state) {
  Eigen::VectorXd w1(400), w2(400);
  for (int v = 0; v < 400; ++v) {
    w1(v) = v < 200 ? 200.0 : 40.0;
    w2(v) = v < 200 ? 40.0 : 200.0;
  }
  const Graph g = union_quasirandom({w1, w2}, 5).graph;
  for (auto _ : state) benchmark::DoNotOptimize(rank2_decompose(g));
}
BENCHMARK(bm_rank2_decompose);

void bm_spectral_distance(benchmark::State& state) {
  const Graph a = dense_random(48, 6);
  const Graph b = dense_random(64, 7);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_distance(a, b));
}
BENCHMARK(bm_spectral_distance);

}  // namespace

BENCHMARK_MAIN();
