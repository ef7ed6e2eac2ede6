#include <benchmark/benchmark.h>

#include <string>

#include "euroqual/mc_engine.hpp"
#include "euroqual/team_file.hpp"

namespace {

using namespace euroqual;

const TeamSet& teams() {
  static const TeamSet t =
      load_team_file(std::string(EUROQUAL_DATA_DIR) + "/uefa_teams_2017.csv");
  return t;
}

void BM_MatchModelBuild(benchmark::State& state) {
  const SimConfig cfg;
  for (auto _ : state) {
    MatchModel model(teams(), cfg);
    benchmark::DoNotOptimize(model);
  }
}
BENCHMARK(BM_MatchModelBuild);

void BM_MatchPlay(benchmark::State& state) {
  const MatchModel model(teams(), SimConfig{});
  RandomStream rng(1, 0);
  TeamId a = 0, b = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(model.play(a, b, rng));
    a = (a + 7) % kNumTeams;
    b = (a + 13) % kNumTeams;
  }
}
BENCHMARK(BM_MatchPlay);

void BM_Season(benchmark::State& state) {
  SimConfig cfg;
  cfg.path_policy = static_cast<PathPolicy>(state.range(0));
  const SeasonSimulator sim(teams(), cfg);
  std::uint64_t k = 0;
  for (auto _ : state) {
    RandomStream rng(cfg.master_seed, k++);
    benchmark::DoNotOptimize(sim.run_iteration(rng));
  }
  state.SetLabel(std::string(to_string(cfg.path_policy)));
}
BENCHMARK(BM_Season)->DenseRange(0, 2);

void BM_RunSimulation(benchmark::State& state) {
  SimConfig cfg;
  cfg.iterations = static_cast<std::uint64_t>(state.range(0));
  cfg.workers = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_simulation(teams(), cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunSimulation)->Arg(10'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
