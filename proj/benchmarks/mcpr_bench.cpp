#include <benchmark/benchmark.h>

#include "mcpr/adversary.hpp"
#include "mcpr/experiment.hpp"
#include "mcpr/pagerank.hpp"
#include "mcpr/walks.hpp"

namespace {

static void BM_GenerateWalk(benchmark::State& state) {
  const auto script = mcpr::build_binary(1024);
  const mcpr::DynGraph g = mcpr::build_graph(script);
  mcpr::RngStream rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mcpr::generate_walk(g, 0, 32, rng));
  }
}
BENCHMARK(BM_GenerateWalk);

static void BM_InitStore(benchmark::State& state) {
  const auto N = static_cast<std::uint32_t>(state.range(0));
  const mcpr::DynGraph g = mcpr::build_graph(mcpr::build_binary(N));
  mcpr::RngStream rng(1);
  for (auto _ : state) {
    mcpr::WalkStore store(g, 10, 0.2, rng);
    benchmark::DoNotOptimize(store.walk_count());
  }
  state.SetItemsProcessed(state.iterations() * g.node_count() * 10);
}
BENCHMARK(BM_InitStore)->Arg(1 << 10)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

static void BM_Replay(benchmark::State& state) {
  const auto script = mcpr::build_binary(static_cast<std::uint32_t>(state.range(0)));
  const auto order = state.range(1) == 0 ? mcpr::Order::kAdversarial
                                         : mcpr::Order::kRandom;
  std::uint64_t seed = 1;
  std::uint64_t reroutes = 0;
  for (auto _ : state) {
    const auto record = mcpr::replay(
        script, {.walks_per_node = 10, .epsilon = 0.2, .seed = seed++, .order = order});
    reroutes += record.reroutes_total;
  }
  state.counters["reroutes"] = benchmark::Counter(
      static_cast<double>(reroutes), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_Replay)
    ->ArgsProduct({{1 << 10, 1 << 12, 1 << 14}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

static void BM_ExpectedScores(benchmark::State& state) {
  const mcpr::DynGraph g = mcpr::build_graph(mcpr::build_dary(64, 3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mcpr::expected_scores(g, 0.2));
  }
}
BENCHMARK(BM_ExpectedScores)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
