#include <benchmark/benchmark.h>

#include "sqw/coins.hpp"
#include "sqw/evolution.hpp"
#include "sqw/greenfn.hpp"
#include "sqw/operators.hpp"
#include "sqw/random.hpp"
#include "sqw/topology.hpp"

using namespace sqw;

namespace {

struct Diamond {
  GraphTopology graph = build_diamond_with_leads(1, 1);
  CoinSet coins{graph};
  BondState entry = diamond_entry_state(1, 1);
  BondState exit = diamond_exit_state(1, 1);
  Diamond() {
    const DiamondSites s = diamond_sites(1, 1);
    coins.assign(coin_grover(s.entry_hub, 3));
    coins.assign(coin_grover(s.superior, 2));
    coins.assign(coin_grover(s.inferior, 2));
    coins.assign(coin_grover(s.exit_hub, 3));
  }
};

void BM_GreenFloat(benchmark::State& state) {
  const Diamond d;
  for (auto _ : state)
    benchmark::DoNotOptimize(green_function(d.graph, d.coins, {d.entry, d.exit, true}));
}
BENCHMARK(BM_GreenFloat);

void BM_GreenExact(benchmark::State& state) {
  const Diamond d;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        green_function_exact(d.graph, d.coins, {d.entry, d.exit, true}));
}
BENCHMARK(BM_GreenExact);

void BM_GreenFloatRandom(benchmark::State& state) {
  Rng rng(7);
  const auto inst =
      random_walk_instance(static_cast<int>(state.range(0)), 3, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        green_function(inst.graph, inst.coins, {inst.entry, inst.exit, true}));
}
BENCHMARK(BM_GreenFloatRandom)->Arg(4)->Arg(8)->Arg(12);

void BM_ApplyStep(benchmark::State& state) {
  Rng rng(11);
  const auto inst = random_walk_instance(10, 4, rng);
  // spread the excitation first so the step acts on a dense state
  WalkState w = evolve(inst.graph, inst.coins, WalkState::unit(inst.entry), 12);
  for (auto _ : state) benchmark::DoNotOptimize(apply_step(inst.graph, inst.coins, w));
}
BENCHMARK(BM_ApplyStep);

void BM_StepCoefficientsExact(benchmark::State& state) {
  const Diamond d;
  const auto g = green_function_exact(d.graph, d.coins, {d.entry, d.exit, true});
  for (auto _ : state)
    benchmark::DoNotOptimize(step_coefficients(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_StepCoefficientsExact)->Arg(50)->Arg(199);

void BM_SymbolicSeries(benchmark::State& state) {
  const Diamond d;
  const DiamondSites s = diamond_sites(1, 1);
  SymbolAssignment sym;
  for (SiteId site : {s.entry_hub, s.superior, s.inferior, s.exit_hub})
    sym.bind_all_entries(d.graph, site);
  const int n_max = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        symbolic_series(d.graph, d.coins, sym, d.entry, d.exit, n_max));
}
BENCHMARK(BM_SymbolicSeries)->Arg(5)->Arg(9)->Arg(13);

}  // namespace

BENCHMARK_MAIN();
