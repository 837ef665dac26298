#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "clubswarm/benchmarks.hpp"
#include "clubswarm/rng.hpp"

namespace clubswarm {

struct Particle {
  std::vector<double> position;
  std::vector<double> velocity;
  double fitness = 0.0;
  std::vector<double> best_position;
  double best_fitness = 0.0;

  bool operator==(const Particle&) const = default;
};

/// Constant inertia weight w.
struct FixedInertia {
  double w;
  bool operator==(const FixedInertia&) const = default;
};

/// Inertia weight drawn uniformly from (0, w) per dimension per update.
struct RandomInertia {
  double w;
  bool operator==(const RandomInertia&) const = default;
};

using Inertia = std::variant<FixedInertia, RandomInertia>;

inline constexpr double kDefaultLearningRate = 1.494;
inline constexpr double kDefaultFixedInertia = 0.729;

struct UpdateParams {
  double lrn1 = kDefaultLearningRate;
  double lrn2 = kDefaultLearningRate;
  Inertia inertia = FixedInertia{kDefaultFixedInertia};
  double v_max = 1.0;

  bool operator==(const UpdateParams&) const = default;
};

/// Velocity update toward the particle's own best and the neighborhood guide
/// `guide`, then clamped component-wise to [-v_max, v_max].
///
/// Draw order per dimension: r1 (RandomInertia only), r2 (cognitive),
/// r3 (social). Callers that replay a stream depend on this order.
template <UniformSource R>
void update_velocity(Particle& p, std::span<const double> guide, const UpdateParams& params,
                     R& rng) {
  const bool random_inertia = std::holds_alternative<RandomInertia>(params.inertia);
  const double w = random_inertia ? std::get<RandomInertia>(params.inertia).w
                                  : std::get<FixedInertia>(params.inertia).w;
  const std::size_t n = p.position.size();
  for (std::size_t d = 0; d < n; ++d) {
    const double inertia = random_inertia ? w * rng.uniform01() : w;
    const double r2 = rng.uniform01();
    const double r3 = rng.uniform01();
    const double x = p.position[d];
    const double v = inertia * p.velocity[d] + params.lrn1 * r2 * (p.best_position[d] - x) +
                     params.lrn2 * r3 * (guide[d] - x);
    p.velocity[d] = std::clamp(v, -params.v_max, params.v_max);
  }
}

/// x <- x + v. Positions are never clipped.
inline void update_position(Particle& p) {
  for (std::size_t d = 0; d < p.position.size(); ++d) p.position[d] += p.velocity[d];
}

/// Records `new_fitness` as the current fitness and adopts the current
/// position as personal best on strict improvement. Returns true if the best
/// moved.
inline bool update_personal_best(Particle& p, double new_fitness) {
  p.fitness = new_fitness;
  if (new_fitness < p.best_fitness) {
    p.best_fitness = new_fitness;
    p.best_position = p.position;
    return true;
  }
  return false;
}

/// Position uniform over the function's init box, velocity uniform over
/// [-v_max, v_max]; personal best starts at the initial position.
/// Draws: all position components, then all velocity components.
template <UniformSource R>
Particle init_particle(const BenchmarkFunction& f, R& rng) {
  Particle p;
  p.position = sample_initial_position(f, rng);
  p.velocity.resize(f.dimension);
  for (auto& v : p.velocity) v = -f.v_max + 2.0 * f.v_max * rng.uniform01();
  p.fitness = evaluate(f, p.position);
  p.best_position = p.position;
  p.best_fitness = p.fitness;
  return p;
}

}  // namespace clubswarm
