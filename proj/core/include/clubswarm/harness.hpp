#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "clubswarm/benchmarks.hpp"
#include "clubswarm/swarm_core.hpp"
#include "clubswarm/topology.hpp"

namespace clubswarm {

enum class OptimizerKind { GlobalBest, Ring, Clubs };

/// Which optimizer to run. `default_level` only matters for Clubs and is
/// mirrored into RunConfig::clubs.default_level by the presets.
struct OptimizerSpec {
  OptimizerKind kind = OptimizerKind::Clubs;
  std::size_t default_level = 10;

  bool operator==(const OptimizerSpec&) const = default;
};

/// "pso-g", "pso-l", "cpso(15)".
std::string optimizer_label(const OptimizerSpec& o);

/// Accepts pso-g/global, pso-l/ring, cpso/clubs (case-insensitive).
std::optional<OptimizerKind> parse_optimizer_kind(std::string_view name);

/// Thrown for invalid experiment parameterizations, before any iteration runs.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  FunctionId function = FunctionId::Sphere;
  std::size_t dimension = 0;  // 0 = the function's reference dimension
  OptimizerKind optimizer = OptimizerKind::Clubs;
  ClubParams clubs{};
  std::size_t swarm_size = 20;
  std::size_t iterations = 10000;
  std::size_t runs = 50;
  std::uint64_t seed = 0;
  double lrn1 = kDefaultLearningRate;
  double lrn2 = kDefaultLearningRate;
  double w_fixed = kDefaultFixedInertia;
  bool record_membership_histogram = false;

  /// Reference-scale preset for one (function, optimizer) cell of the grid.
  static RunConfig preset(FunctionId f, const OptimizerSpec& o, std::uint64_t seed = 0);

  OptimizerSpec optimizer_spec() const { return {optimizer, clubs.default_level}; }

  /// Throws ConfigError on an inconsistent configuration.
  void validate() const;

  /// Objective with the effective dimension applied.
  BenchmarkFunction objective() const;

  /// Kinematic parameters: fixed inertia for the static topologies, random
  /// inertia with the function's w for clubs.
  UpdateParams update_params() const;

  bool operator==(const RunConfig&) const = default;
};

/// The five-optimizer comparison set: pso-l, pso-g, cpso(20), cpso(15), cpso(10).
std::vector<OptimizerSpec> comparison_optimizers();

struct RunTrace {
  /// Swarm-wide best personal-best fitness after each iteration.
  std::vector<double> best_value;
  /// Index of the particle with the best current fitness each iteration.
  std::vector<std::size_t> best_particle_index;
  double final_best_value = 0.0;
  /// Per iteration, number of particles at each membership level
  /// (index = level). Clubs only, when requested.
  std::vector<std::vector<std::size_t>> membership_histogram;

  bool operator==(const RunTrace&) const = default;
};

/// Read-only view handed to an observer once after initialization
/// (iteration 0) and after every completed iteration.
struct IterationView {
  std::size_t iteration;
  std::span<const Particle> swarm;
  /// Neighborhood best used as guide by each particle this iteration
  /// (empty at iteration 0).
  std::span<const std::size_t> guides;
  /// Club state after this iteration's membership update; null unless clubs.
  const ClubState* clubs;
};

using IterationObserver = std::function<void(const IterationView&)>;

/// One full optimization. Per iteration: evaluate, update personal bests,
/// record the trace, then for each particle pick the neighborhood best and
/// move it, then (clubs only) update membership from the fitness evaluated
/// at the top of the iteration.
///
/// Random draws come from a single Rng seeded with `run_seed`: particle
/// initialization (particle order; position then velocity components), club
/// assignment, then per iteration the velocity draws in particle order
/// followed by membership draws.
RunTrace run_single(const RunConfig& cfg, std::uint64_t run_seed,
                    const IterationObserver& observer = {});

/// Seed of run k in a batch: master XOR k.
constexpr std::uint64_t derive_run_seed(std::uint64_t master, std::size_t run) {
  return master ^ static_cast<std::uint64_t>(run);
}

/// 1-based index of the first iteration whose best value is <= threshold.
std::optional<std::size_t> iterations_to_closeness(const RunTrace& trace, double threshold);

struct BatchStats {
  double closeness_threshold = 0.0;
  std::size_t runs = 0;
  std::size_t successes = 0;
  // Iterations-to-closeness over successful runs only; absent without any.
  std::optional<double> avg;
  std::optional<double> median;
  std::optional<double> max;
  std::optional<double> min;
  double success_rate = 0.0;  // percent
  double mean_final_value = 0.0;

  bool operator==(const BatchStats&) const = default;
};

BatchStats compute_batch_stats(std::span<const RunTrace> traces, double threshold);

struct BatchOptions {
  std::size_t jobs = 1;
  bool keep_traces = true;
  /// Called from the worker executing run `run`; must be thread-safe when
  /// jobs > 1.
  std::function<void(std::size_t run, const IterationView&)> observer;
};

struct BatchResult {
  std::vector<std::uint64_t> seeds;
  std::vector<RunTrace> traces;  // empty unless keep_traces
  std::vector<double> final_values;
  std::vector<std::optional<std::size_t>> hits;  // iterations to closeness per run
  BatchStats stats;
};

/// cfg.runs independent runs seeded by derive_run_seed(cfg.seed, k).
/// Results are identical for any `jobs`.
BatchResult run_batch(const RunConfig& cfg, const BatchOptions& options = {});

struct InfluenceConfig {
  std::size_t membership = 10;
  std::size_t iterations = 500;
  std::size_t dimension = 30;
  std::size_t swarm_size = 20;
  std::size_t n_clubs = 100;
  double lrn1 = kDefaultLearningRate;
  double lrn2 = kDefaultLearningRate;
  double w = 1.2;
  double v_max = 2000.0;
  double init_lo = 1000.0;
  double init_hi = 2000.0;

  bool operator==(const InfluenceConfig&) const = default;
};

/// Spread of a single good particle through a frozen club network.
///
/// Particle 0 starts at the origin, the rest uniformly in
/// [init_lo, init_hi]^n, all at rest; objective is the coordinate sum; every
/// particle is in exactly `membership` random clubs that never change.
/// Returns the mean current value over the swarm at iteration 0 and after
/// each of the `iterations` moves (length iterations + 1).
std::vector<double> influence_experiment(const InfluenceConfig& cfg, Rng& rng);

}  // namespace clubswarm
