#include "kernels.hpp"

#include <cmath>

namespace vilenkin {

namespace {

void check_kernel_order(const GroupSpec& g, std::uint64_t n) {
  if (n < 1 || n > g.size())
    throw std::out_of_range("kernel order n out of range (1 <= n <= M_L)");
}

GridFunction synthesize_real_coeffs(GroupPtr spec,
                                    const std::vector<double>& lambda) {
  Spectrum s;
  s.coeffs.assign(spec->size(), cdouble{0.0, 0.0});
  s.spec = std::move(spec);
  for (std::size_t j = 0; j < lambda.size(); ++j) s.coeffs[j] = lambda[j];
  return synthesize(s);
}

}  // namespace

GridFunction dirichlet_kernel(GroupPtr spec, std::uint64_t n) {
  check_kernel_order(*spec, n);
  std::vector<double> lambda(n, 1.0);
  return synthesize_real_coeffs(std::move(spec), lambda);
}

GridFunction fejer_kernel(GroupPtr spec, std::uint64_t n) {
  check_kernel_order(*spec, n);
  // psi_j occurs in D_k for k > j, so K_n carries weight (n-j)/n.
  std::vector<double> lambda(n);
  for (std::uint64_t j = 0; j < n; ++j)
    lambda[j] = static_cast<double>(n - j) / static_cast<double>(n);
  return synthesize_real_coeffs(std::move(spec), lambda);
}

GridFunction fejer_mn_closed(GroupPtr spec, std::size_t n) {
  if (n > spec->level()) throw std::out_of_range("level n out of range");
  const GroupSpec& g = *spec;
  const std::uint64_t Mn = g.gen_power(n);
  GridFunction out = zero_grid(spec);
  for (std::uint64_t x = 0; x < g.size(); ++x) {
    if (x % Mn == 0) {  // x in I_n
      out.values[x] = 0.5 * static_cast<double>(Mn + 1);
      continue;
    }
    // first nonzero digit position t (x not in I_{t+1}); here t < n since
    // x is outside I_n
    std::size_t t = 0;
    while (g.digit(x, t) == 0) ++t;
    const std::uint32_t xt = g.digit(x, t);
    const std::uint64_t zeroed = x - static_cast<std::uint64_t>(xt) * g.gen_power(t);
    if (zeroed % Mn == 0) {  // x - x_t e_t in I_n
      const cdouble r = g.root(t, xt);
      // the branch guarantees x_t != 0, so r_t(x) != 1
      if (std::abs(r - cdouble{1.0, 0.0}) == 0.0)
        throw std::logic_error("singular branch hit r_t(x) == 1");
      out.values[x] = static_cast<double>(g.gen_power(t)) / (cdouble{1.0, 0.0} - r);
    }
  }
  return out;
}

double dirichlet_complement_residual(GroupPtr g, std::size_t n,
                                     std::uint64_t j) {
  if (n > g->level()) throw std::out_of_range("level n out of range");
  const std::uint64_t Mn = g->gen_power(n);
  if (j >= Mn) throw std::out_of_range("j must satisfy 0 <= j < M_n");

  const GridFunction lhs = dirichlet_kernel(g, Mn - j);  // D_{M_n - j}
  const GridFunction dmn = dirichlet_kernel(g, Mn);
  GridFunction dj = zero_grid(g);
  if (j >= 1) dj = dirichlet_kernel(g, j);

  double residual = 0.0;
  for (std::uint64_t x = 0; x < g->size(); ++x) {
    const cdouble rhs =
        dmn.values[x] - psi(*g, Mn - 1, x) * std::conj(dj.values[x]);
    residual = std::max(residual, std::abs(lhs.values[x] - rhs));
  }
  return residual;
}

GridFunction t_kernel(GroupPtr spec, const WeightSeq& q, std::uint64_t n) {
  check_kernel_order(*spec, n);
  if (q.nmax() < n) throw std::invalid_argument("weights shorter than n");
  const double Qn = q.partial(n);
  if (!(Qn > 0.0)) throw std::invalid_argument("Q_n must be positive");
  std::vector<double> lambda(n, 0.0);
  for (std::uint64_t j = 0; j + 1 < n; ++j)
    lambda[j] = (Qn - q.partial(j + 1)) / Qn;
  return synthesize_real_coeffs(std::move(spec), lambda);
}

KernelFamily::KernelFamily(GroupPtr spec, KernelKind kind,
                           std::optional<WeightSeq> weights)
    : spec_(std::move(spec)), kind_(kind), weights_(std::move(weights)) {
  if (kind_ == KernelKind::tkernel && !weights_)
    throw std::invalid_argument("t-kernel family needs weights");
}

std::shared_ptr<const GridFunction> KernelFamily::at(std::uint64_t n) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
  }
  GridFunction k;
  switch (kind_) {
    case KernelKind::dirichlet: k = dirichlet_kernel(spec_, n); break;
    case KernelKind::fejer: k = fejer_kernel(spec_, n); break;
    case KernelKind::tkernel: k = t_kernel(spec_, *weights_, n); break;
  }
  auto shared = std::make_shared<const GridFunction>(std::move(k));
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = cache_.emplace(n, std::move(shared));
  return it->second;
}

}  // namespace vilenkin
