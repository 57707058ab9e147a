#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace zt::detail {

/// splitmix64 step; used to derive independent per-trial seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * u01(rng);
}

/// Box-Muller normal deviate; std::normal_distribution is implementation
/// defined, this reproduces bit-for-bit across standard libraries.
inline double gaussian(std::mt19937_64& rng) {
  double u = 0.0;
  while (u == 0.0) u = u01(rng);
  double v = u01(rng);
  return std::sqrt(-2.0 * std::log(u)) *
         std::cos(6.283185307179586477 * v);
}

}  // namespace zt::detail
