#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "means.hpp"
#include "spectral.hpp"

namespace vilenkin {

/// D_n = sum_{k<n} psi_k. D_0 is the zero function; 1 <= n <= M_L for the
/// public entry point.
GridFunction dirichlet_kernel(GroupPtr spec, std::uint64_t n);

/// K_n = (1/n) sum_{k=1}^{n} D_k. haar_integral(K_n) = 1.
GridFunction fejer_kernel(GroupPtr spec, std::uint64_t n);

/// The three-branch closed form of K_{M_n}:
///   (M_n+1)/2                 on I_n,
///   M_t / (1 - r_t(x))        for x in I_t \ I_{t+1} with x - x_t e_t in I_n,
///   0                         otherwise.
/// Agrees with fejer_kernel(spec, M_n) pointwise.
GridFunction fejer_mn_closed(GroupPtr spec, std::size_t n);

/// Max over the grid of |D_{M_n - j} - (D_{M_n} - psi_{M_n-1} conj(D_j))|,
/// for 0 <= j < M_n. The identity makes this roundoff-small.
double dirichlet_complement_residual(GroupPtr spec, std::size_t n,
                                     std::uint64_t j);

/// F_n = (1/Q_n) sum_{k<n} q_k D_k. haar_integral(F_n) = (Q_n - q_0)/Q_n.
GridFunction t_kernel(GroupPtr spec, const WeightSeq& q, std::uint64_t n);

enum class KernelKind { dirichlet, fejer, tkernel };

/// Memoized kernel evaluator: verification sweeps touch every grid point of
/// many kernels, so kernels are materialized once per (kind, n). Lookup and
/// insert are guarded by a mutex; results do not depend on cache state.
class KernelFamily {
 public:
  KernelFamily(GroupPtr spec, KernelKind kind,
               std::optional<WeightSeq> weights = std::nullopt);

  const GroupSpec& spec() const { return *spec_; }
  KernelKind kind() const { return kind_; }

  std::shared_ptr<const GridFunction> at(std::uint64_t n) const;

 private:
  GroupPtr spec_;
  KernelKind kind_;
  std::optional<WeightSeq> weights_;
  mutable std::mutex mu_;
  mutable std::map<std::uint64_t, std::shared_ptr<const GridFunction>> cache_;
};

}  // namespace vilenkin
