#pragma once

#include <cmath>

#include "approx.hpp"
#include "kernels.hpp"
#include "report.hpp"

namespace vilenkin {

/// Builds a test function from a selector:
///   random:<seed>  pseudo-random complex values, mean removed
///   lip:<alpha>    lacunary Lipschitz-class function
///   char:<k>       the character psi_k, k >= 1
/// Inequality suites need mean-zero functions (the right sides vanish on
/// constants while T_n does not reproduce them), so char:0 is rejected.
GridFunction make_function(GroupPtr spec, const std::string& selector);

struct TheoremConfig {
  GroupPtr spec;
  std::string weights_kind = "const";
  std::vector<double> pvals = {1.0, 2.0};
  std::vector<std::string> functions = {"random:1"};
};

/// Ratio suite for one inequality, id in {"1", "2", "3", "fejer"}.
/// Sweeps every admissible order: n in [1, M_L-1] for "1", "2" and "fejer",
/// the subsequence orders M_1..M_L for "3" (the n column holds M_n).
/// For "2" the report extras carry the constant-free comparison ratios:
/// scaled_sup, scaled_tophalf_factor, and scaled_pass (factor < 10 for every
/// (f, p) over the top half of the n range).
VerificationReport run_theorem_suite(const std::string& id,
                                     const TheoremConfig& cfg);

/// Kernel identity suite: closed forms (exhaustive over the grid), the
/// complement identity, integral / L1 / pointwise Fejer bounds, and the
/// t-kernel integral for the given weights.
KernelReport run_kernel_suite(GroupPtr spec,
                              const std::string& weights_kind = "const");

struct RateConfig {
  std::size_t level = 14;  // Walsh depth; the grid has 2^level points
  double alpha = 0.5;
  std::string weights_kind = "const";
  double p = 1.0;
  double tol = 0.15;
  double target = NAN;  // NaN: derived from alpha and the weight kind
  std::uint64_t max_grid = 0;
};

/// Convergence-rate experiment: err(n) = ||T_n f - f||_p for f =
/// lip_function(alpha) at the subsequence orders n = M_1..M_L on a Walsh
/// group, with the log-log slope fitted against the expected exponent.
RateReport run_rate_suite(const RateConfig& cfg);

/// Expected slope for lip(alpha): -min(alpha, 1 - beta) where beta is the
/// decay exponent of the weights (0 for const/logpow/growing pow). Throws
/// for kinds whose rate is not a pure power (pow:-1 and custom); pass an
/// explicit target for those.
double default_rate_target(double alpha, const std::string& weights_kind);

/// M_n ||sigma_{M_n} psi_1 - psi_1||_p. Equals 1 for every n <= L: the
/// Fejer error of a non-constant function does not decay at rate o(1/M_n).
double negative_probe(GroupPtr spec, std::size_t n_level, double p);

}  // namespace vilenkin
