#pragma once

#include <cstdint>

#include "grid.hpp"

namespace vilenkin {

/// splitmix64. The exact state transition is part of the reproducibility
/// contract: identical seeds must yield identical test functions on every
/// platform.
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [-1, 1): 2 * ((next() >> 11) * 2^-53) - 1.
  double next_unit() {
    const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return 2.0 * u - 1.0;
  }

 private:
  std::uint64_t state_;
};

/// Pseudo-random test function: for each rank in order, draws re then im
/// uniform on [-1, 1); with mean_zero the arithmetic mean is subtracted.
GridFunction random_grid(GroupPtr spec, std::uint64_t seed, bool mean_zero);

}  // namespace vilenkin
