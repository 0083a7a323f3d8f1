#include <benchmark/benchmark.h>

#include "combdyn/forcing.hpp"
#include "combdyn/logistic.hpp"
#include "combdyn/markov.hpp"
#include "combdyn/successors.hpp"

using namespace combdyn;

static void BM_Charpoly(benchmark::State& state) {
  const Cascade c = cascade(Cycle::trivial(), static_cast<int>(state.range(0)), CascadeOptions{128, true});
  const SignedDigraph g = build_digraph(c.levels.back());
  for (auto _ : state) benchmark::DoNotOptimize(charpoly(g));
  state.SetLabel("period " + std::to_string(c.levels.back().size()));
}
BENCHMARK(BM_Charpoly)->DenseRange(3, 6);

static void BM_UnimodalDouble(benchmark::State& state) {
  const Cascade c = cascade(Cycle::trivial(), static_cast<int>(state.range(0)), CascadeOptions{128, true});
  for (auto _ : state) benchmark::DoNotOptimize(unimodal_double(c.levels.back()));
}
BENCHMARK(BM_UnimodalDouble)->DenseRange(3, 6);

static void BM_Cascade(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cascade(Cycle::trivial(), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Cascade)->DenseRange(3, 6);

static void BM_Loops(benchmark::State& state) {
  const SignedDigraph g = build_digraph(parse_cycle("(135246)"));
  for (auto _ : state) benchmark::DoNotOptimize(loops_of_length(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Loops)->DenseRange(4, 10, 2);

static void BM_ForcedTypes(benchmark::State& state) {
  const Cycle beta = parse_cycle("(123)");
  for (auto _ : state) benchmark::DoNotOptimize(forced_types(beta, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ForcedTypes)->DenseRange(4, 8, 2);

static void BM_LogisticIterate(benchmark::State& state) {
  LogisticParams p;
  p.a = 3.55;
  for (auto _ : state) benchmark::DoNotOptimize(iterate(p));
}
BENCHMARK(BM_LogisticIterate);

BENCHMARK_MAIN();
