#pragma once

#include <utility>

#include "means.hpp"
#include "spectral.hpp"

namespace vilenkin {

/// omega_p(1/M_s, f) for s = 0..L. Non-increasing in s, capped by 2||f||_p,
/// and zero at s = L (translations by I_L act trivially on step functions).
struct ModulusProfile {
  double p = 2.0;
  std::vector<double> omega;
};

/// sup_{|t| < 1/M_s} ||f(.-t) - f||_p, realized exactly as the max over the
/// coset representatives of I_s.
double modulus(const GridFunction& f, double p, std::size_t s);

ModulusProfile modulus_profile(const GridFunction& f, double p);

/// Lacunary test function f = sum_{k<L} M_k^-alpha psi_{M_k}; lies in
/// Lip(alpha, 2) with omega_2(1/M_s, f) comparable to M_s^-alpha.
GridFunction lip_function(double alpha, GroupPtr spec);

/// Closed form of omega_2(1/M_s, lip_function(alpha)): digits of t in I_s
/// are independent, so the max over representatives splits per level into
///   ( sum_{k>=s} M_k^-2alpha max_d |r_k(d) - 1|^2 )^(1/2).
double lip_modulus2_closed(double alpha, const GroupSpec& g, std::size_t s);

/// Block index N with M_N <= n < M_{N+1}; requires 1 <= n < M_L.
std::size_t block_index(const GroupSpec& g, std::uint64_t n);

/// Bound for ||T_n f - f||_p with non-increasing weights:
///   (6R^6/Q_n) sum_{j<N} M_j q_{M_j} omega_p(1/M_j, f)
///   + 4R^6 omega_p(1/M_N, f).
double thm1_rhs(const ModulusProfile& mp, const WeightSeq& q, std::uint64_t n,
                const GroupSpec& g);

struct Thm2Rhs {
  double rhs;      // full bound with explicit constants
  double scaled_sum;  // sum_{j<=N} (M_j/M_N) omega_p(1/M_j, f), no constant
};

/// Bound for ||T_n f - f||_p with non-decreasing weights:
///   (6R^6 q_{n-1}/Q_n) sum_{j<N} M_j omega_p(1/M_j, f)
///   + (4R^6 q_{n-1} M_N/Q_n) omega_p(1/M_N, f),
/// plus the constant-free comparison sum used under the O(1/n) condition.
Thm2Rhs thm2_rhs(const ModulusProfile& mp, const WeightSeq& q, std::uint64_t n,
                 const GroupSpec& g);

/// Bound for ||T_{M_n} f - f||_p with non-decreasing weights (n is the
/// subsequence level, 1 <= n <= L):
///   R^2 sum_{j<n} (M_j/M_n) omega_p(1/M_j, f)
///   + (2R^4/q_0) sum_{j<n} (n-j) q_{M_n-M_j} (M_j/M_n) omega_p(1/M_j, f)
///   + (R^2 + 2) omega_p(1/M_n, f).
double thm3_rhs(const ModulusProfile& mp, const WeightSeq& q,
                std::size_t n_level, const GroupSpec& g);

/// Bound for ||sigma_n f - f||_p:
///   2R^5 sum_{s<=N} (M_s/M_N) omega_p(1/M_s, f).
double fejer_rhs(const ModulusProfile& mp, std::uint64_t n, const GroupSpec& g);

struct RateFit {
  double slope = 0.0;
  double r2 = 0.0;
};

/// Least-squares slope of log(err) against log(n). Needs >= 3 points and
/// strictly positive errors.
RateFit rate_fit(const std::vector<std::pair<std::uint64_t, double>>& series);

}  // namespace vilenkin
