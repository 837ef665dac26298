#include <numeric>

#include "clubswarm/harness.hpp"

namespace clubswarm {

namespace {

double coordinate_sum(std::span<const double> x) { return std::accumulate(x.begin(), x.end(), 0.0); }

double mean_value(std::span<const Particle> swarm) {
  double s = 0.0;
  for (const auto& p : swarm) s += coordinate_sum(p.position);
  return s / static_cast<double>(swarm.size());
}

}  // namespace

std::vector<double> influence_experiment(const InfluenceConfig& cfg, Rng& rng) {
  if (cfg.swarm_size == 0 || cfg.dimension == 0)
    throw ConfigError("influence: swarm size and dimension must be positive");
  if (cfg.membership == 0 || cfg.membership > cfg.n_clubs)
    throw ConfigError("influence: membership must lie in [1, " + std::to_string(cfg.n_clubs) +
                      "]");

  std::vector<Particle> swarm(cfg.swarm_size);
  for (std::size_t i = 0; i < swarm.size(); ++i) {
    Particle& p = swarm[i];
    p.position.assign(cfg.dimension, 0.0);
    if (i != 0)
      for (auto& x : p.position) x = rng.uniform(cfg.init_lo, cfg.init_hi);
    p.velocity.assign(cfg.dimension, 0.0);
    p.fitness = coordinate_sum(p.position);
    p.best_position = p.position;
    p.best_fitness = p.fitness;
  }

  ClubParams frozen;
  frozen.n_clubs = cfg.n_clubs;
  frozen.min_level = frozen.default_level = frozen.max_level = cfg.membership;
  frozen.retention_ratio = 1;
  const Topology topology = ClubState::random(cfg.swarm_size, frozen, rng);

  UpdateParams params;
  params.lrn1 = cfg.lrn1;
  params.lrn2 = cfg.lrn2;
  params.inertia = RandomInertia{cfg.w};
  params.v_max = cfg.v_max;

  std::vector<double> series;
  series.reserve(cfg.iterations + 1);
  series.push_back(mean_value(swarm));
  std::vector<std::size_t> guides(swarm.size());
  for (std::size_t it = 1; it <= cfg.iterations; ++it) {
    for (auto& p : swarm) update_personal_best(p, coordinate_sum(p.position));
    for (std::size_t i = 0; i < swarm.size(); ++i)
      guides[i] = neighborhood_best(topology, i, swarm);
    for (std::size_t i = 0; i < swarm.size(); ++i) {
      update_velocity(swarm[i], swarm[guides[i]].best_position, params, rng);
      update_position(swarm[i]);
    }
    series.push_back(mean_value(swarm));
  }
  return series;
}

}  // namespace clubswarm
