#include "clubswarm/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <limits>
#include <numeric>
#include <thread>

namespace clubswarm {

std::string optimizer_label(const OptimizerSpec& o) {
  switch (o.kind) {
    case OptimizerKind::GlobalBest: return "pso-g";
    case OptimizerKind::Ring: return "pso-l";
    case OptimizerKind::Clubs: return "cpso(" + std::to_string(o.default_level) + ")";
  }
  return "unknown";
}

std::optional<OptimizerKind> parse_optimizer_kind(std::string_view name) {
  std::string s(name);
  std::ranges::transform(s, s.begin(),
                         [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s == "pso-g" || s == "psog" || s == "global") return OptimizerKind::GlobalBest;
  if (s == "pso-l" || s == "psol" || s == "ring") return OptimizerKind::Ring;
  if (s == "cpso" || s == "c-pso" || s == "clubs") return OptimizerKind::Clubs;
  return std::nullopt;
}

RunConfig RunConfig::preset(FunctionId f, const OptimizerSpec& o, std::uint64_t seed) {
  RunConfig cfg;
  cfg.function = f;
  cfg.optimizer = o.kind;
  cfg.clubs.default_level = o.default_level;
  cfg.seed = seed;
  return cfg;
}

std::vector<OptimizerSpec> comparison_optimizers() {
  return {{OptimizerKind::Ring, 10},
          {OptimizerKind::GlobalBest, 10},
          {OptimizerKind::Clubs, 20},
          {OptimizerKind::Clubs, 15},
          {OptimizerKind::Clubs, 10}};
}

void RunConfig::validate() const {
  if (swarm_size == 0) throw ConfigError("swarm size must be positive");
  if (runs == 0) throw ConfigError("runs must be at least 1");
  try {
    (void)objective();
    if (optimizer == OptimizerKind::Clubs) clubs.validate();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

BenchmarkFunction RunConfig::objective() const {
  const BenchmarkFunction& f = benchmark(function);
  return dimension == 0 ? f : with_dimension(f, dimension);
}

UpdateParams RunConfig::update_params() const {
  const BenchmarkFunction& f = benchmark(function);
  UpdateParams p;
  p.lrn1 = lrn1;
  p.lrn2 = lrn2;
  p.v_max = f.v_max;
  if (optimizer == OptimizerKind::Clubs)
    p.inertia = RandomInertia{f.w_cpso};
  else
    p.inertia = FixedInertia{w_fixed};
  return p;
}

namespace {

Topology make_topology(const RunConfig& cfg, Rng& rng) {
  switch (cfg.optimizer) {
    case OptimizerKind::GlobalBest: return GlobalTopology{};
    case OptimizerKind::Ring: return RingTopology{};
    case OptimizerKind::Clubs: return ClubState::random(cfg.swarm_size, cfg.clubs, rng);
  }
  throw ConfigError("unknown optimizer");
}

std::vector<std::size_t> level_histogram(const ClubState& clubs) {
  std::vector<std::size_t> h(clubs.params().max_level + 1, 0);
  for (std::size_t i = 0; i < clubs.n_particles(); ++i) {
    const std::size_t lvl = clubs.level(i);
    if (lvl >= h.size()) h.resize(lvl + 1, 0);
    ++h[lvl];
  }
  return h;
}

}  // namespace

RunTrace run_single(const RunConfig& cfg, std::uint64_t run_seed,
                    const IterationObserver& observer) {
  cfg.validate();
  const BenchmarkFunction f = cfg.objective();
  const UpdateParams params = cfg.update_params();
  const std::size_t n = cfg.swarm_size;

  Rng rng(run_seed);
  std::vector<Particle> swarm;
  swarm.reserve(n);
  for (std::size_t i = 0; i < n; ++i) swarm.push_back(init_particle(f, rng));
  Topology topology = make_topology(cfg, rng);
  ClubState* clubs = std::get_if<ClubState>(&topology);

  RunTrace trace;
  trace.best_value.reserve(cfg.iterations);
  trace.best_particle_index.reserve(cfg.iterations);
  trace.final_best_value = std::ranges::min(swarm, {}, &Particle::best_fitness).best_fitness;

  std::vector<std::size_t> guides(n, 0);
  std::vector<double> fitness(n, 0.0);
  if (observer) observer({0, swarm, {}, clubs});

  for (std::size_t it = 1; it <= cfg.iterations; ++it) {
    double best_value = std::numeric_limits<double>::infinity();
    std::size_t best_current = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Particle& p = swarm[i];
      fitness[i] = evaluate(f, p.position);
      update_personal_best(p, fitness[i]);
      best_value = std::min(best_value, p.best_fitness);
      if (fitness[i] < fitness[best_current]) best_current = i;
    }
    trace.best_value.push_back(best_value);
    trace.best_particle_index.push_back(best_current);
    trace.final_best_value = best_value;

    // Guides depend only on personal bests, which are frozen for the loop.
    for (std::size_t i = 0; i < n; ++i) guides[i] = neighborhood_best(topology, i, swarm);
    for (std::size_t i = 0; i < n; ++i) {
      update_velocity(swarm[i], swarm[guides[i]].best_position, params, rng);
      update_position(swarm[i]);
    }

    if (clubs) {
      update_membership(*clubs, fitness, it, rng);
      if (cfg.record_membership_histogram)
        trace.membership_histogram.push_back(level_histogram(*clubs));
    }
    if (observer) observer({it, swarm, guides, clubs});
  }
  return trace;
}

std::optional<std::size_t> iterations_to_closeness(const RunTrace& trace, double threshold) {
  for (std::size_t t = 0; t < trace.best_value.size(); ++t)
    if (trace.best_value[t] <= threshold) return t + 1;
  return std::nullopt;
}

namespace {

BatchStats stats_from(std::span<const std::optional<std::size_t>> hits,
                      std::span<const double> finals, double threshold) {
  BatchStats s;
  s.closeness_threshold = threshold;
  s.runs = finals.size();
  std::vector<double> its;
  for (const auto& h : hits)
    if (h) its.push_back(static_cast<double>(*h));
  s.successes = its.size();
  s.success_rate = s.runs ? 100.0 * static_cast<double>(s.successes) / static_cast<double>(s.runs)
                          : 0.0;
  s.mean_final_value =
      s.runs ? std::accumulate(finals.begin(), finals.end(), 0.0) / static_cast<double>(s.runs)
             : 0.0;
  if (!its.empty()) {
    std::ranges::sort(its);
    const std::size_t m = its.size();
    s.avg = std::accumulate(its.begin(), its.end(), 0.0) / static_cast<double>(m);
    s.median = m % 2 ? its[m / 2] : 0.5 * (its[m / 2 - 1] + its[m / 2]);
    s.min = its.front();
    s.max = its.back();
  }
  return s;
}

}  // namespace

BatchStats compute_batch_stats(std::span<const RunTrace> traces, double threshold) {
  std::vector<std::optional<std::size_t>> hits;
  std::vector<double> finals;
  for (const auto& t : traces) {
    hits.push_back(iterations_to_closeness(t, threshold));
    finals.push_back(t.final_best_value);
  }
  return stats_from(hits, finals, threshold);
}

BatchResult run_batch(const RunConfig& cfg, const BatchOptions& options) {
  cfg.validate();
  const double threshold = cfg.objective().closeness_threshold;
  const std::size_t runs = cfg.runs;

  BatchResult out;
  out.seeds.resize(runs);
  for (std::size_t k = 0; k < runs; ++k) out.seeds[k] = derive_run_seed(cfg.seed, k);
  out.final_values.resize(runs);
  out.hits.resize(runs);
  if (options.keep_traces) out.traces.resize(runs);

  auto execute = [&](std::size_t k) {
    IterationObserver obs;
    if (options.observer)
      obs = [&options, k](const IterationView& v) { options.observer(k, v); };
    RunTrace t = run_single(cfg, out.seeds[k], obs);
    out.final_values[k] = t.final_best_value;
    out.hits[k] = iterations_to_closeness(t, threshold);
    if (options.keep_traces) out.traces[k] = std::move(t);
  };

  const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, runs);
  if (jobs == 1) {
    for (std::size_t k = 0; k < runs; ++k) execute(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    {
      std::vector<std::jthread> workers;
      for (std::size_t w = 0; w < jobs; ++w)
        workers.emplace_back([&, w] {
          (void)w;
          for (std::size_t k = next++; k < runs && !failed; k = next++) {
            try {
              execute(k);
            } catch (...) {
              if (!failed.exchange(true)) failure = std::current_exception();
            }
          }
        });
    }
    if (failure) std::rethrow_exception(failure);
  }

  out.stats = stats_from(out.hits, out.final_values, threshold);
  return out;
}

}  // namespace clubswarm
