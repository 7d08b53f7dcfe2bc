#include <benchmark/benchmark.h>

#include <random>

#include "gammoid/ac_detector.hpp"
#include "gammoid/chain.hpp"
#include "gammoid/families.hpp"
#include "gammoid/matroid.hpp"
#include "gammoid/menger.hpp"

namespace {

using namespace gammoid;

Digraph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Digraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u != v && coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

void BM_MaxLinkage(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Digraph g = random_graph(n, 8.0 / static_cast<double>(n), 42);
  std::vector<VertexId> a, b;
  for (VertexId v = 0; v < n / 4; ++v) a.push_back(v);
  for (VertexId v = static_cast<VertexId>(n - n / 4); v < n; ++v) b.push_back(v);
  const Mode mode = static_cast<Mode>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(max_linkage(g, a, b, mode).value());
}
BENCHMARK(BM_MaxLinkage)->ArgsProduct({{64, 256, 1024, 4096}, {0, 1}});

void BM_Gammoid(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Digraph g = random_graph(n, 0.3, 7);
  const std::vector<VertexId> b{0, 1, 2};
  for (auto _ : state) benchmark::DoNotOptimize(gammoid::gammoid(g, b, Mode::DirectedEdge).rank());
}
BENCHMARK(BM_Gammoid)->DenseRange(6, 14, 4);

void BM_CheckAxioms(benchmark::State& state) {
  const Digraph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.3, 11);
  const SetSystem m = gammoid::gammoid(g, std::vector<VertexId>{0, 1}, Mode::DirectedVertex);
  for (auto _ : state) benchmark::DoNotOptimize(check_axioms(m).all_hold());
}
BENCHMARK(BM_CheckAxioms)->DenseRange(5, 9, 2);

void BM_Chain(benchmark::State& state) {
  const GraphPresentation p = generate_family("comb_steal", 4);
  ChainOptions options;
  options.steps = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_chain(p, options).states.size());
}
BENCHMARK(BM_Chain)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_AcPrefix(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Truncation t = generate_family("grid3Z", 2 * k + 4).truncation(2 * k + 4);
  for (auto _ : state) benchmark::DoNotOptimize(find_ac_prefix(t.graph, t.sink_set, k).nodes);
}
BENCHMARK(BM_AcPrefix)->DenseRange(1, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
