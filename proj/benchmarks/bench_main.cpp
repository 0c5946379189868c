#include <benchmark/benchmark.h>

#include <tgd/adversaries.hpp>
#include <tgd/delta_ecc.hpp>
#include <tgd/discoverers.hpp>
#include <tgd/generators.hpp>
#include <tgd/infection.hpp>

using namespace tgd;

namespace {

TemporalGraph bench_graph(std::size_t n, double p, Time tmax) {
  return generate_ert({n, p, tmax, 12345});
}

}  // namespace

static void BM_Simulate(benchmark::State& state) {
  const std::size_t n = state.range(0);
  TemporalGraph g = bench_graph(n, 0.3, static_cast<Time>(n));
  for (auto _ : state) {
    Infection inf = simulate(g, {{0, 0}}, 3);
    benchmark::DoNotOptimize(inf.timetable);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.records().size()));
}
BENCHMARK(BM_Simulate)->RangeMultiplier(2)->Range(16, 256);

static void BM_DeltaEcc(benchmark::State& state) {
  const std::size_t n = state.range(0);
  TemporalGraph g = bench_graph(n, 0.3, static_cast<Time>(n));
  for (auto _ : state) {
    auto ecc = delta_ecc(g, 3);
    benchmark::DoNotOptimize(ecc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.records().size()));
}
BENCHMARK(BM_DeltaEcc)->RangeMultiplier(2)->Range(16, 256);

static void BM_DiscoveryFollow(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const bool skip = state.range(1) != 0;
  TemporalGraph g = bench_graph(n, 0.3, static_cast<Time>(n));
  GameConfig c;
  c.node_count = n;
  c.lifetime = g.lifetime();
  c.delta = 2;
  c.round_budget = 100 * n * static_cast<std::size_t>(g.lifetime());
  std::size_t rounds = 0;
  for (auto _ : state) {
    HonestAdversary adversary(g);
    DiscoveryFollow df(skip);
    PlayResult r = play(c, df, adversary);
    rounds = r.outcome.rounds_used;
    benchmark::DoNotOptimize(r);
  }
  state.counters["rounds"] = static_cast<double>(rounds);
  state.counters["m"] = static_cast<double>(g.edge_count());
}
BENCHMARK(BM_DiscoveryFollow)
    ->ArgsProduct({{10, 20, 40}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

static void BM_BruteForce(benchmark::State& state) {
  const std::size_t n = state.range(0);
  TemporalGraph g = bench_graph(n, 0.3, 10);
  GameConfig c;
  c.node_count = n;
  c.lifetime = g.lifetime();
  for (auto _ : state) {
    HonestAdversary adversary(g);
    BruteForce bf;
    benchmark::DoNotOptimize(play(c, bf, adversary));
  }
}
BENCHMARK(BM_BruteForce)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
