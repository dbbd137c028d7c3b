#pragma once

#include <string>

#include "grid.hpp"
#include "spectral.hpp"

namespace vilenkin {

enum class WeightClass { non_increasing, non_decreasing, other };

/// Weight sequence q_0..q_{nmax-1} with partial sums Q_0..Q_nmax and a
/// monotonicity classification. q_0 > 0 and q_k >= 0 are enforced; Q_n is
/// accumulated with compensated summation. A constant sequence satisfies
/// both monotonicity predicates and is tagged non_decreasing.
class WeightSeq {
 public:
  /// kind: "const", "pow:<gamma>" (q_k = (k+1)^gamma),
  /// "logpow:<beta>" (q_k = log(k+2)^-beta, beta > 0),
  /// "custom:<v0,v1,...>" (repeated cyclically up to nmax).
  static WeightSeq make(const std::string& kind, std::uint64_t nmax);
  static WeightSeq from_values(std::vector<double> q,
                               std::string label = "custom");

  double q(std::uint64_t k) const { return q_.at(k); }
  double partial(std::uint64_t n) const { return partials_.at(n); }  // Q_n
  std::uint64_t nmax() const { return q_.size(); }
  WeightClass cls() const { return cls_; }
  bool non_increasing() const { return non_increasing_; }
  bool non_decreasing() const { return non_decreasing_; }

  /// Finite proxy for the regularity condition Q_n -> infinity.
  bool regular_proxy() const { return regular_; }

  /// max over 2 <= n <= nmax of n q_{n-1} / Q_n. The weights satisfy the
  /// O(1/n) condition exactly when this stays bounded as nmax grows; a
  /// finite run can only report the observed constant.
  double cond2_sup() const { return cond2_sup_; }

  const std::string& label() const { return label_; }

 private:
  explicit WeightSeq(std::vector<double> q, std::string label);

  std::vector<double> q_;
  std::vector<double> partials_;
  std::string label_;
  WeightClass cls_ = WeightClass::other;
  bool non_increasing_ = false;
  bool non_decreasing_ = false;
  bool regular_ = false;
  double cond2_sup_ = 0.0;
};

/// sigma_n f = (1/n) sum_{k=1}^{n} S_k f; equals convolve(f, K_n).
GridFunction fejer_mean(const GridFunction& f, std::uint64_t n);
GridFunction fejer_mean(const Spectrum& fhat, std::uint64_t n);

/// T_n f = (1/Q_n) sum_{k=0}^{n-1} q_k S_k f (S_0 f = 0); equals
/// convolve(f, F_n).
GridFunction t_mean(const GridFunction& f, const WeightSeq& q, std::uint64_t n);
GridFunction t_mean(const Spectrum& fhat, const WeightSeq& q, std::uint64_t n);

/// t_n f = (1/Q_n) sum_{k=1}^{n} q_{n-k} S_k f.
GridFunction norlund_mean(const GridFunction& f, const WeightSeq& q,
                          std::uint64_t n);
GridFunction norlund_mean(const Spectrum& fhat, const WeightSeq& q,
                          std::uint64_t n);

/// T_n f through the Abel-transformed form
///   (1/Q_n) [ sum_{k=0}^{n-2} (q_k - q_{k+1}) k sigma_k f
///             + q_{n-1} (n-1) sigma_{n-1} f ],
/// with sigma_0 f = 0, accumulated in grid space (n >= 2). Must agree with
/// t_mean to 1e-10.
GridFunction t_mean_abel(const GridFunction& f, const WeightSeq& q,
                         std::uint64_t n);

/// Scalar Abel identity residual
///   | sum_{k=0}^{n-2} (q_k - q_{k+1}) k + q_{n-1}(n-1) - (Q_n - q_0) |.
/// The k = 0 Abel block drops the q_0 * 1 term, so the transformed sum
/// telescopes to Q_n - q_0 rather than Q_n.
double abel_weight_residual(const WeightSeq& q, std::uint64_t n);

}  // namespace vilenkin
