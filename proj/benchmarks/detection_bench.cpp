#include <random>

#include <benchmark/benchmark.h>

#include "wheelramsey/constructions.hpp"
#include "wheelramsey/detection.hpp"
#include "wheelramsey/io.hpp"

namespace {

using namespace wheelramsey;

Graph random_graph(std::uint64_t seed, int order, double p) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(p);
  Graph g(order);
  for (Vertex u = 0; u < order; ++u)
    for (Vertex v = u + 1; v < order; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

void BM_VerifyEvenLower(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const EdgeColoring c = construct_even_lower(n).coloring;
  for (auto _ : state) benchmark::DoNotOptimize(verify_wheel_free(c, n, {1, {}}).pass());
}
BENCHMARK(BM_VerifyEvenLower)->Arg(8)->Arg(12)->Arg(20);

void BM_VerifyOddLower(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const EdgeColoring c = construct_odd_lower(n).coloring;
  for (auto _ : state) benchmark::DoNotOptimize(verify_wheel_free(c, n, {1, {}}).pass());
}
BENCHMARK(BM_VerifyOddLower)->Arg(7)->Arg(11)->Arg(15);

void BM_VerifyIteratedBlowup(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
  const EdgeColoring c = corollary14_family(k, n).coloring;
  for (auto _ : state) benchmark::DoNotOptimize(verify_wheel_free(c, n, {1, {}}).pass());
  state.SetLabel("order " + std::to_string(c.order()));
}
BENCHMARK(BM_VerifyIteratedBlowup)->Args({3, 7})->Args({3, 8})->Args({4, 8})->Unit(benchmark::kMillisecond);

// Hamilton cycle queries: subset DP up to order 24, DFS above.
void BM_HamiltonCycle(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const Graph g = random_graph(42, order, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(search_cycle_of_length(g, order).method);
}
BENCHMARK(BM_HamiltonCycle)->DenseRange(12, 20, 4)->Arg(32)->Unit(benchmark::kMicrosecond);

void BM_CycleLengths(benchmark::State& state) {
  const Graph g = random_graph(7, static_cast<int>(state.range(0)), 0.25);
  for (auto _ : state) benchmark::DoNotOptimize(cycle_lengths(g).size());
}
BENCHMARK(BM_CycleLengths)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMicrosecond);

void BM_Girth(benchmark::State& state) {
  const Graph g = random_graph(9, static_cast<int>(state.range(0)), 0.05);
  for (auto _ : state) benchmark::DoNotOptimize(girth(g));
}
BENCHMARK(BM_Girth)->Arg(64)->Arg(256)->Arg(1024);

void BM_EncodeColoring(benchmark::State& state) {
  const EdgeColoring c = corollary14_family(4, 8).coloring;
  for (auto _ : state) benchmark::DoNotOptimize(encode_coloring(c).size());
}
BENCHMARK(BM_EncodeColoring)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
