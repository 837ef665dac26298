#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <random>

namespace clubswarm {

/// Anything that yields uniform doubles in [0, 1). The kinematic and sampling
/// helpers are templated on this so tests can script exact draws.
template <typename R>
concept UniformSource = requires(R& r) {
  { r.uniform01() } -> std::convertible_to<double>;
};

/// Seeded random stream used by every stochastic operation in the library.
///
/// The mapping from engine output to doubles is spelled out here instead of
/// going through std::uniform_real_distribution, whose algorithm is left to
/// the standard library vendor; traces are therefore bit-reproducible across
/// toolchains for a given seed.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                      static_cast<std::uint32_t>(seed >> 32)};
    engine_.seed(seq);
  }

  /// 53 random mantissa bits, uniform on [0, 1).
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform index in [0, n). n must be positive.
  std::size_t index(std::size_t n) {
    auto k = static_cast<std::size_t>(uniform01() * static_cast<double>(n));
    return k < n ? k : n - 1;
  }

  // UniformRandomBitGenerator, for std::shuffle and friends in test code.
  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace clubswarm
