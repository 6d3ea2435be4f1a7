#include <benchmark/benchmark.h>

#include <random>

#include "raag/theorem.hpp"

using namespace raag;

namespace {

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(labels[u], labels[v]);
  return Graph(labels, edges);
}

Graph cycle(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(labels[i], labels[(i + 1) % n]);
  return Graph(labels, edges);
}

Exec mode(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void BM_MinimalSeparators(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(1)), 0.35, 7);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_separators(g, kDefaultSeparatorBound, mode(state)));
}
BENCHMARK(BM_MinimalSeparators)->ArgsProduct({{0, 1}, {12, 16}})->Unit(benchmark::kMillisecond);

void BM_CutCliques(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(1)), 0.35, 11);
  for (auto _ : state) benchmark::DoNotOptimize(cut_cliques(g, mode(state)));
}
BENCHMARK(BM_CutCliques)->ArgsProduct({{0, 1}, {12, 16}})->Unit(benchmark::kMillisecond);

void BM_BuildBall(benchmark::State& state) {
  const Graph g = cycle(5);
  const auto s = AmalgamSplitting::from_separator(g, g.set_of({"v0", "v2"}), 1);
  BallOptions opts;
  opts.length = static_cast<int>(state.range(1));
  opts.exec = mode(state);
  opts.vertex_budget = 10000000;
  opts.element_budget = 100000000;
  for (auto _ : state) benchmark::DoNotOptimize(build_ball(s, opts).vertex_count());
}
BENCHMARK(BM_BuildBall)->ArgsProduct({{0, 1}, {3, 4}})->Unit(benchmark::kMillisecond);

void BM_AllSeparators(benchmark::State& state) {
  const Graph g = cycle(7);
  CheckerConfig config;
  config.exec = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(verify_all_separators(g, config).size());
}
BENCHMARK(BM_AllSeparators)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
