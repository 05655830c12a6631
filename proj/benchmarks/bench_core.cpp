// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>

#include "tlab/canon.hpp"
#include "tlab/constructions.hpp"
#include "tlab/ortho.hpp"
#include "tlab/ramsey.hpp"
#include "tlab/transversal.hpp"

namespace {

using namespace tlab;

BitDigraph random_digraph(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  BitDigraph d(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && rng() % 3 == 0) d.add_arc(i, j);
  return d;
}

void BM_CanonicalLabel(benchmark::State& state) {
  BitDigraph d = random_digraph(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_label(d));
}
BENCHMARK(BM_CanonicalLabel)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_CanonicalLabelCycle(benchmark::State& state) {
  BitDigraph d = BitDigraph::directed_cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_label(d));
}
BENCHMARK(BM_CanonicalLabelCycle)->Arg(16)->Arg(64)->Arg(128);

void BM_EnumerateDrThreeThree(benchmark::State& state) {
  for (auto _ : state) {
    Budget budget;
    benchmark::DoNotOptimize(enumerate_counterexamples(3, 3, 9, budget));
  }
}
BENCHMARK(BM_EnumerateDrThreeThree)->Unit(benchmark::kMillisecond);

void BM_CheckCounterexample(benchmark::State& state) {
  auto d = find_circulant_counterexample(3, 3, 8);
  for (auto _ : state) benchmark::DoNotOptimize(check_counterexample(*d, 3, 3));
}
BENCHMARK(BM_CheckCounterexample);

void BM_IndependenceNumber(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const int n = static_cast<int>(state.range(0));
  UGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() % 2) g.add_edge(i, j);
  for (auto _ : state) benchmark::DoNotOptimize(independence_number(g));
}
BENCHMARK(BM_IndependenceNumber)->Arg(32)->Arg(48)->Arg(64);

void BM_TransversalTensor(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  PartitionedGraph pg;
  pg.graph = tensor(UGraph::complete(4), UGraph::empty(t));
  for (int u = 0; u < 4; ++u) {
    pg.classes.push_back(VertexSet::range(u * t, u * t + t / 2));
    pg.classes.push_back(VertexSet::range(u * t + t / 2, (u + 1) * t));
  }
  for (auto _ : state) benchmark::DoNotOptimize(max_profile(pg, t / 2));
}
BENCHMARK(BM_TransversalTensor)->Arg(8)->Arg(32);

void BM_HensonTwoRounds(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(henson_approx(3, 2, UGraph::empty(2)));
}
BENCHMARK(BM_HensonTwoRounds);

void BM_AlphaSearchPlane(benchmark::State& state) {
  VectorFamily pool = integer_direction_pool(2, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(alpha_lower_search(2, static_cast<int>(state.range(0)), pool));
}
BENCHMARK(BM_AlphaSearchPlane)->Arg(2)->Arg(3);

}  // namespace
BENCHMARK_MAIN();
