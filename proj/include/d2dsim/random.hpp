// random.hpp — deterministic random streams for Monte Carlo realizations.
//
// std::mt19937_64's raw output is fully specified by the standard, but the
// std::*_distribution transforms are not. The transforms here are written
// out explicitly so that a given seed produces the same draw sequence on
// every platform and compiler.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace d2d {

// splitmix64 finalizer; decorrelates consecutive seed inputs.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  // Stream for one realization; distinct indices give decorrelated streams
  // regardless of execution order.
  static RandomStream substream(std::uint64_t master_seed, std::uint64_t index) {
    return RandomStream(splitmix64(master_seed ^ splitmix64(index)));
  }

  // [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  // Exponential with unit mean, strictly positive support.
  double exponential_unit_mean() {
    double u;
    do {
      u = uniform01();
    } while (u <= 0.0);
    return -std::log(u);
  }

  // Standard normal via Box-Muller; consumes exactly two uniforms per call.
  double normal01() {
    double u1;
    do {
      u1 = uniform01();
    } while (u1 <= 0.0);
    const double u2 = uniform01();
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace d2d
