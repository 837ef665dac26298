#include "clubswarm/benchmarks.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace clubswarm {

namespace {

// clang-format off
constexpr std::array<BenchmarkFunction, 5> kTable{{
    // id                     dim  init range       v_max  w_cpso closeness
    {FunctionId::Sphere,      30, -100.0, 100.0,   100.0,  1.20,  1e-4},
    {FunctionId::Rosenbrock,  30,  -30.0,  30.0,    30.0,  1.20,  100.0},
    {FunctionId::Rastrigin,   30,  -5.12,  5.12,    5.12,  1.40,  50.0},
    {FunctionId::SchafferF6,   2, -100.0, 100.0,   100.0,  1.65,  1e-3},
    {FunctionId::Ackley,      30,  -32.0,  32.0,    32.0,  1.36,  1e-2},
}};
// clang-format on

constexpr std::array<std::string_view, 5> kNames{"sphere", "rosenbrock", "rastrigin",
                                                  "schaffer_f6", "ackley"};

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double sphere(std::span<const double> x) {
  double s = 0.0;
  for (double xi : x) s += xi * xi;
  return s;
}

double rosenbrock(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i + 1] - x[i] * x[i];
    const double b = x[i] - 1.0;
    s += 100.0 * a * a + b * b;
  }
  return s;
}

double rastrigin(std::span<const double> x) {
  double s = 0.0;
  for (double xi : x) s += xi * xi - 10.0 * std::cos(kTwoPi * xi) + 10.0;
  return s;
}

double schaffer_f6(std::span<const double> x) {
  const double r2 = x[0] * x[0] + x[1] * x[1];
  const double s = std::sin(std::sqrt(r2));
  const double d = 1.0 + 0.001 * r2;
  return 0.5 + (s * s - 0.5) / (d * d);
}

double ackley(std::span<const double> x) {
  const double n = static_cast<double>(x.size());
  double sq = 0.0;
  double cs = 0.0;
  for (double xi : x) {
    sq += xi * xi;
    cs += std::cos(kTwoPi * xi);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 +
         std::numbers::e;
}

}  // namespace

const BenchmarkFunction& benchmark(FunctionId id) {
  return kTable[static_cast<std::size_t>(id)];
}

BenchmarkFunction with_dimension(const BenchmarkFunction& f, std::size_t dimension) {
  if (dimension == 0) throw std::invalid_argument("dimension must be positive");
  if (f.id == FunctionId::SchafferF6 && dimension != 2)
    throw std::invalid_argument("schaffer_f6 is defined for exactly 2 dimensions");
  BenchmarkFunction out = f;
  out.dimension = dimension;
  return out;
}

std::string_view function_name(FunctionId id) {
  return kNames[static_cast<std::size_t>(id)];
}

std::optional<FunctionId> parse_function_name(std::string_view name) {
  std::string lower(name);
  std::ranges::transform(lower, lower.begin(),
                         [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (FunctionId id : kAllFunctions)
    if (function_name(id) == lower) return id;
  return std::nullopt;
}

double evaluate(const BenchmarkFunction& f, std::span<const double> x) {
  if (x.size() != f.dimension)
    throw std::invalid_argument("evaluate: expected " + std::to_string(f.dimension) +
                                " components, got " + std::to_string(x.size()));
  switch (f.id) {
    case FunctionId::Sphere: return sphere(x);
    case FunctionId::Rosenbrock: return rosenbrock(x);
    case FunctionId::Rastrigin: return rastrigin(x);
    case FunctionId::SchafferF6: return schaffer_f6(x);
    case FunctionId::Ackley: return ackley(x);
  }
  throw std::logic_error("evaluate: unknown function id");
}

}  // namespace clubswarm
