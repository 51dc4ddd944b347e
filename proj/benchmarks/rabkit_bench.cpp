#include <benchmark/benchmark.h>

#include <vector>

#include "rabkit/blowup.hpp"
#include "rabkit/building.hpp"
#include "rabkit/chamber_graph.hpp"
#include "rabkit/graph_product.hpp"
#include "rabkit/random.hpp"
#include "rabkit/rigidity.hpp"

namespace {

void BM_Reduce(benchmark::State& state) {
  auto pres = rab::make_uniform(rab::SimplicialGraph::cycle(5), 3);
  rab::Xoshiro256 rng(1);
  std::vector<std::vector<rab::Syllable>> words(256);
  for (auto& w : words)
    for (int i = 0; i < state.range(0); ++i)
      w.push_back({static_cast<rab::Vertex>(rng.below(5)), {1 + static_cast<std::int64_t>(rng.below(2)), 0}});
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(rab::reduce(words[i++ % words.size()], pres));
}
BENCHMARK(BM_Reduce)->Arg(8)->Arg(32)->Arg(128);

void BM_FiniteBall(benchmark::State& state) {
  rab::Building b(rab::make_uniform(rab::SimplicialGraph::cycle(5), 2));
  for (auto _ : state) benchmark::DoNotOptimize(b.ball(b.base(), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FiniteBall)->DenseRange(2, 5);

void BM_WindowedBall(benchmark::State& state) {
  rab::Building b(rab::make_raag(rab::SimplicialGraph::path(3)));
  for (auto _ : state) benchmark::DoNotOptimize(b.ball(b.base(), 4, state.range(0)));
}
BENCHMARK(BM_WindowedBall)->Arg(1)->Arg(2)->Arg(3);

void BM_ChamberGraphCliques(benchmark::State& state) {
  rab::Building b(rab::make_uniform(rab::SimplicialGraph::cycle(5), 2));
  auto g = rab::chamber_graph(b.ball(b.base(), 4));
  for (auto _ : state) benchmark::DoNotOptimize(rab::maximal_cliques(g));
}
BENCHMARK(BM_ChamberGraphCliques);

void BM_Analyze(benchmark::State& state) {
  auto g = rab::random_graph(static_cast<int>(state.range(0)), 0.5, 42);
  for (auto _ : state) benchmark::DoNotOptimize(rab::analyze(g));
}
BENCHMARK(BM_Analyze)->Arg(10)->Arg(12);

void BM_Survey(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rab::survey(30, 0.5, static_cast<int>(state.range(0)), 42));
}
BENCHMARK(BM_Survey)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_EnvelopeCount(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(rab::envelope_automorphism_count(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
}
BENCHMARK(BM_EnvelopeCount)->Args({2, 1})->Args({3, 1})->Args({2, 2});

}  // namespace

BENCHMARK_MAIN();
