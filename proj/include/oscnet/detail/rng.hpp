#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace oscnet::detail {

// Explicit draws instead of std::*_distribution so that identical seeds
// give identical streams on every standard library.

/// Uniform in [0, 1).
inline double uniform01(std::mt19937_64& rng) {
  return std::ldexp(double(rng() >> 11), -53);
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

/// Standard normal via Box-Muller.
inline double normal(std::mt19937_64& rng) {
  double u1 = std::ldexp(double((rng() >> 11) + 1), -53);  // (0, 1]
  double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

/// Uniform integer in [0, bound) by rejection.
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return draw % bound;
}

}  // namespace oscnet::detail
