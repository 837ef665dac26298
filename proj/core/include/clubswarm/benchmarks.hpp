#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "clubswarm/rng.hpp"

namespace clubswarm {

enum class FunctionId { Sphere, Rosenbrock, Rastrigin, SchafferF6, Ackley };

inline constexpr std::array<FunctionId, 5> kAllFunctions{
    FunctionId::Sphere, FunctionId::Rosenbrock, FunctionId::Rastrigin,
    FunctionId::SchafferF6, FunctionId::Ackley};

/// A test objective together with the experiment parameters that travel with
/// it: the symmetric initialization box, the per-dimension speed cap, the
/// upper end of the random inertia range used by the clubs optimizer, and the
/// closeness value that counts a run as successful.
struct BenchmarkFunction {
  FunctionId id;
  std::size_t dimension;
  double init_lo;
  double init_hi;
  double v_max;
  double w_cpso;
  double closeness_threshold;
  double optimum_value = 0.0;

  bool operator==(const BenchmarkFunction&) const = default;
};

/// Reference parameters for one of the five objectives.
const BenchmarkFunction& benchmark(FunctionId id);

/// Copy of `f` with a different dimension. Schaffer f6 is fixed at two
/// variables and rejects anything else with std::invalid_argument.
BenchmarkFunction with_dimension(const BenchmarkFunction& f, std::size_t dimension);

/// Lower-case CLI name: sphere, rosenbrock, rastrigin, schaffer_f6, ackley.
std::string_view function_name(FunctionId id);

/// Case-insensitive inverse of function_name.
std::optional<FunctionId> parse_function_name(std::string_view name);

/// Objective value at `x`. Total over finite reals; no clipping to the
/// initialization box. Throws std::invalid_argument when x.size() differs
/// from f.dimension.
double evaluate(const BenchmarkFunction& f, std::span<const double> x);

/// Each component drawn independently and uniformly from [init_lo, init_hi].
template <UniformSource R>
std::vector<double> sample_initial_position(const BenchmarkFunction& f, R& rng) {
  std::vector<double> x(f.dimension);
  for (auto& xd : x) xd = f.init_lo + (f.init_hi - f.init_lo) * rng.uniform01();
  return x;
}

}  // namespace clubswarm
