#include <benchmark/benchmark.h>

#include <vector>

#include <clubswarm/harness.hpp>

using namespace clubswarm;

static void BM_Evaluate(benchmark::State& state) {
  const auto id = static_cast<FunctionId>(state.range(0));
  const BenchmarkFunction& f = clubswarm::benchmark(id);
  Rng rng(1);
  const auto x = sample_initial_position(f, rng);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(f, x));
  state.SetLabel(std::string(function_name(id)));
}
BENCHMARK(BM_Evaluate)->DenseRange(0, 4);

static void BM_UpdateVelocity(benchmark::State& state) {
  const BenchmarkFunction& f = clubswarm::benchmark(FunctionId::Rastrigin);
  Rng rng(2);
  Particle p = init_particle(f, rng);
  const auto guide = sample_initial_position(f, rng);
  UpdateParams params;
  params.v_max = f.v_max;
  params.inertia = RandomInertia{f.w_cpso};
  for (auto _ : state) {
    update_velocity(p, guide, params, rng);
    benchmark::DoNotOptimize(p.velocity.data());
  }
}
BENCHMARK(BM_UpdateVelocity);

static void BM_NeighborhoodBest(benchmark::State& state) {
  Rng rng(3);
  ClubParams params;
  params.default_level = static_cast<std::size_t>(state.range(0));
  const Topology t = ClubState::random(20, params, rng);
  std::vector<Particle> swarm(20);
  for (auto& p : swarm) p.best_fitness = rng.uniform01();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(neighborhood_best(t, i, swarm));
    i = (i + 1) % 20;
  }
}
BENCHMARK(BM_NeighborhoodBest)->Arg(10)->Arg(20);

static void BM_UpdateMembership(benchmark::State& state) {
  Rng rng(4);
  ClubState s = ClubState::random(20, ClubParams{}, rng);
  std::vector<double> fitness(20);
  std::size_t it = 1;
  for (auto _ : state) {
    for (auto& f : fitness) f = rng.uniform01();
    benchmark::DoNotOptimize(update_membership(s, fitness, it++, rng));
  }
}
BENCHMARK(BM_UpdateMembership);

static void BM_RunSingle(benchmark::State& state) {
  const OptimizerSpec specs[] = {{OptimizerKind::GlobalBest, 10}, {OptimizerKind::Ring, 10},
                                 {OptimizerKind::Clubs, 15}};
  const OptimizerSpec& o = specs[state.range(0)];
  RunConfig cfg = RunConfig::preset(FunctionId::Rastrigin, o);
  cfg.iterations = 500;
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_single(cfg, seed++).final_best_value);
  state.SetLabel(optimizer_label(o));
}
BENCHMARK(BM_RunSingle)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
