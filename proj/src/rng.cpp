#include "rng.hpp"

namespace vilenkin {

GridFunction random_grid(GroupPtr spec, std::uint64_t seed, bool mean_zero) {
  GridFunction f = zero_grid(std::move(spec));
  SplitMix64 rng(seed);
  for (cdouble& z : f.values) {
    const double re = rng.next_unit();
    const double im = rng.next_unit();
    z = {re, im};
  }
  if (mean_zero) {
    cdouble mean{0.0, 0.0};
    for (const cdouble& z : f.values) mean += z;
    mean /= static_cast<double>(f.values.size());
    for (cdouble& z : f.values) z -= mean;
  }
  return f;
}

}  // namespace vilenkin
