#include "approx.hpp"

#include <cmath>

namespace vilenkin {

double modulus(const GridFunction& f, double p, std::size_t s) {
  if (s > f.spec->level()) throw std::out_of_range("scale s out of range");
  if (!(p >= 1.0 && p <= 64.0))
    throw std::domain_error("p must lie in [1, 64]");
  const GroupSpec& g = *f.spec;
  const std::uint64_t size = g.size();
  GridFunction diff = zero_grid(f.spec);
  double best = 0.0;
  for (std::uint64_t t = 0; t < size; t += g.gen_power(s)) {
    if (t == 0) continue;  // zero translation contributes 0
    for (std::uint64_t x = 0; x < size; ++x)
      diff.values[x] = f.values[g.sub(x, t)] - f.values[x];
    best = std::max(best, lp_norm(diff, p));
  }
  return best;
}

ModulusProfile modulus_profile(const GridFunction& f, double p) {
  ModulusProfile mp;
  mp.p = p;
  mp.omega.resize(f.spec->level() + 1);
  for (std::size_t s = 0; s <= f.spec->level(); ++s)
    mp.omega[s] = modulus(f, p, s);
  return mp;
}

GridFunction lip_function(double alpha, GroupPtr spec) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  Spectrum s;
  s.coeffs.assign(spec->size(), cdouble{0.0, 0.0});
  for (std::size_t k = 0; k < spec->level(); ++k)
    s.coeffs[spec->gen_power(k)] =
        std::pow(static_cast<double>(spec->gen_power(k)), -alpha);
  s.spec = std::move(spec);
  return synthesize(s);
}

double lip_modulus2_closed(double alpha, const GroupSpec& g, std::size_t s) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  if (s > g.level()) throw std::out_of_range("scale s out of range");
  double acc = 0.0;
  for (std::size_t k = s; k < g.level(); ++k) {
    double worst = 0.0;
    for (std::uint32_t d = 1; d < g.radix(k); ++d)
      worst = std::max(worst, std::norm(g.root(k, d) - cdouble{1.0, 0.0}));
    acc += std::pow(static_cast<double>(g.gen_power(k)), -2.0 * alpha) * worst;
  }
  return std::sqrt(acc);
}

std::size_t block_index(const GroupSpec& g, std::uint64_t n) {
  if (n < 1 || n >= g.size())
    throw std::out_of_range("n out of range (1 <= n < M_L)");
  std::size_t N = 0;
  while (N + 1 <= g.level() && g.gen_power(N + 1) <= n) ++N;
  return N;
}

namespace {

double pow6(double x) { return x * x * x * x * x * x; }

void check_profile(const ModulusProfile& mp, const GroupSpec& g) {
  if (mp.omega.size() != g.level() + 1)
    throw std::invalid_argument("modulus profile does not match the group");
}

}  // namespace

double thm1_rhs(const ModulusProfile& mp, const WeightSeq& q, std::uint64_t n,
                const GroupSpec& g) {
  check_profile(mp, g);
  if (!q.non_increasing())
    throw std::invalid_argument("theorem 1 needs non-increasing weights");
  const std::size_t N = block_index(g, n);
  if (q.nmax() < n) throw std::invalid_argument("weights shorter than n");
  const double R6 = pow6(static_cast<double>(g.bound()));
  double sum = 0.0;
  for (std::size_t j = 0; j < N; ++j)
    sum += static_cast<double>(g.gen_power(j)) * q.q(g.gen_power(j)) *
           mp.omega[j];
  return 6.0 * R6 / q.partial(n) * sum + 4.0 * R6 * mp.omega[N];
}

Thm2Rhs thm2_rhs(const ModulusProfile& mp, const WeightSeq& q, std::uint64_t n,
                 const GroupSpec& g) {
  check_profile(mp, g);
  if (!q.non_decreasing())
    throw std::invalid_argument("theorem 2 needs non-decreasing weights");
  const std::size_t N = block_index(g, n);
  if (q.nmax() < n) throw std::invalid_argument("weights shorter than n");
  const double R6 = pow6(static_cast<double>(g.bound()));
  const double MN = static_cast<double>(g.gen_power(N));
  const double head = q.q(n - 1) / q.partial(n);
  double sum = 0.0;
  for (std::size_t j = 0; j < N; ++j)
    sum += static_cast<double>(g.gen_power(j)) * mp.omega[j];
  Thm2Rhs out;
  out.rhs = 6.0 * R6 * head * sum + 4.0 * R6 * head * MN * mp.omega[N];
  out.scaled_sum = 0.0;
  for (std::size_t j = 0; j <= N; ++j)
    out.scaled_sum += static_cast<double>(g.gen_power(j)) / MN * mp.omega[j];
  return out;
}

double thm3_rhs(const ModulusProfile& mp, const WeightSeq& q,
                std::size_t n_level, const GroupSpec& g) {
  check_profile(mp, g);
  if (!q.non_decreasing())
    throw std::invalid_argument("theorem 3 needs non-decreasing weights");
  if (n_level < 1 || n_level > g.level())
    throw std::out_of_range("subsequence level out of range (1 <= n <= L)");
  const std::uint64_t Mn = g.gen_power(n_level);
  if (q.nmax() < Mn) throw std::invalid_argument("weights shorter than M_n");
  const double R = static_cast<double>(g.bound());
  const double R2 = R * R;
  const double R4 = R2 * R2;
  double first = 0.0, second = 0.0;
  for (std::size_t j = 0; j < n_level; ++j) {
    const double ratio =
        static_cast<double>(g.gen_power(j)) / static_cast<double>(Mn);
    first += ratio * mp.omega[j];
    second += static_cast<double>(n_level - j) * q.q(Mn - g.gen_power(j)) *
              ratio * mp.omega[j];
  }
  return R2 * first + 2.0 * R4 / q.q(0) * second +
         (R2 + 2.0) * mp.omega[n_level];
}

double fejer_rhs(const ModulusProfile& mp, std::uint64_t n,
                 const GroupSpec& g) {
  check_profile(mp, g);
  const std::size_t N = block_index(g, n);
  const double R = static_cast<double>(g.bound());
  const double R5 = R * R * R * R * R;
  const double MN = static_cast<double>(g.gen_power(N));
  double sum = 0.0;
  for (std::size_t s = 0; s <= N; ++s)
    sum += static_cast<double>(g.gen_power(s)) / MN * mp.omega[s];
  return 2.0 * R5 * sum;
}

RateFit rate_fit(const std::vector<std::pair<std::uint64_t, double>>& series) {
  if (series.size() < 3)
    throw std::invalid_argument("rate fit needs at least 3 points");
  double sx = 0, sy = 0;
  for (const auto& [n, err] : series) {
    if (!(err > 0.0))
      throw std::invalid_argument("rate fit needs strictly positive errors");
    if (n < 1) throw std::invalid_argument("rate fit needs n >= 1");
    sx += std::log(static_cast<double>(n));
    sy += std::log(err);
  }
  const double mx = sx / static_cast<double>(series.size());
  const double my = sy / static_cast<double>(series.size());
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& [n, err] : series) {
    const double dx = std::log(static_cast<double>(n)) - mx;
    const double dy = std::log(err) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (!(sxx > 0.0))
    throw std::invalid_argument("rate fit needs at least two distinct n");
  RateFit fit;
  fit.slope = sxy / sxx;
  const double ss_res = syy - sxy * sxy / sxx;
  fit.r2 = syy > 1e-30 ? 1.0 - ss_res / syy : 1.0;
  return fit;
}

}  // namespace vilenkin
