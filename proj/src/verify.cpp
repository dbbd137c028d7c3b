#include "verify.hpp"

#include <cmath>

#include "rng.hpp"

namespace vilenkin {

namespace {

constexpr double kRatioSlack = 1e-9;   // relative slack for pass/fail ratios
constexpr double kIdentityTol = 1e-12;

double parse_number(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad " + what + " '" + text + "'");
  }
  if (pos != text.size())
    throw std::invalid_argument("bad " + what + " '" + text + "'");
  return v;
}

GridFunction diff_grid(const GridFunction& a, const GridFunction& b) {
  GridFunction d = zero_grid(a.spec);
  for (std::uint64_t x = 0; x < d.values.size(); ++x)
    d.values[x] = a.values[x] - b.values[x];
  return d;
}

ReportRow make_row(std::string theorem, std::string f_label, double p,
                   std::uint64_t n, double lhs, double rhs) {
  ReportRow row;
  row.theorem = std::move(theorem);
  row.f_label = std::move(f_label);
  row.p = p;
  row.n = n;
  row.lhs = lhs;
  row.rhs = rhs;
  if (rhs > 0.0) {
    row.ratio = lhs / rhs;
    row.pass = row.ratio <= 1.0 + kRatioSlack;
  } else {
    row.ratio = lhs == 0.0 ? 0.0 : INFINITY;
    row.pass = std::abs(lhs) <= kIdentityTol;
  }
  return row;
}

}  // namespace

GridFunction make_function(GroupPtr spec, const std::string& selector) {
  if (selector.rfind("random:", 0) == 0) {
    const double seed = parse_number(selector.substr(7), "seed");
    if (seed < 0 || seed != std::floor(seed))
      throw std::invalid_argument("seed must be a non-negative integer");
    return random_grid(std::move(spec), static_cast<std::uint64_t>(seed),
                       /*mean_zero=*/true);
  }
  if (selector.rfind("lip:", 0) == 0) {
    const double alpha = parse_number(selector.substr(4), "alpha");
    return lip_function(alpha, std::move(spec));
  }
  if (selector.rfind("char:", 0) == 0) {
    const double k = parse_number(selector.substr(5), "character index");
    if (k != std::floor(k) || k < 1 || k >= static_cast<double>(spec->size()))
      throw std::invalid_argument(
          "char:<k> needs an integer 1 <= k < M_L (char:0 is constant and "
          "excluded from mean-zero suites)");
    return character_grid(std::move(spec), static_cast<std::uint64_t>(k));
  }
  throw std::invalid_argument("unknown function selector '" + selector +
                              "' (random:<seed>, lip:<alpha>, char:<k>)");
}

VerificationReport run_theorem_suite(const std::string& id,
                                     const TheoremConfig& cfg) {
  if (id != "1" && id != "2" && id != "3" && id != "fejer")
    throw std::invalid_argument("theorem id must be 1, 2, 3 or fejer");
  if (!cfg.spec) throw std::invalid_argument("missing group spec");
  if (cfg.pvals.empty() || cfg.functions.empty())
    throw std::invalid_argument("need at least one p and one function");
  const GroupSpec& g = *cfg.spec;
  const std::uint64_t size = g.size();

  const WeightSeq w = WeightSeq::make(cfg.weights_kind, size);
  if (id == "1" && !w.non_increasing())
    throw std::invalid_argument(
        "theorem 1 needs non-increasing weights, got '" + cfg.weights_kind + "'");
  if ((id == "2" || id == "3") && !w.non_decreasing())
    throw std::invalid_argument("theorem " + id +
                                " needs non-decreasing weights, got '" +
                                cfg.weights_kind + "'");

  VerificationReport report;
  report.theorem_id = id;
  report.group = g.format();
  report.weights = cfg.weights_kind;
  report.pvals = cfg.pvals;
  report.functions = cfg.functions;

  double scaled_sup = 0.0;
  double scaled_factor = 0.0;
  bool scaled_pass = true;

  for (const std::string& sel : cfg.functions) {
    const GridFunction f = make_function(cfg.spec, sel);
    const Spectrum fhat = analyze(f);
    for (double p : cfg.pvals) {
      const ModulusProfile mp = modulus_profile(f, p);
      if (id == "3") {
        for (std::size_t lvl = 1; lvl <= g.level(); ++lvl) {
          const std::uint64_t n = g.gen_power(lvl);
          const double lhs = lp_norm(diff_grid(t_mean(fhat, w, n), f), p);
          const double rhs = thm3_rhs(mp, w, lvl, g);
          report.rows.push_back(make_row(id, sel, p, n, lhs, rhs));
        }
        continue;
      }
      std::vector<std::pair<std::uint64_t, double>> scaled_ratios;
      for (std::uint64_t n = 1; n < size; ++n) {
        double lhs = 0.0, rhs = 0.0;
        if (id == "fejer") {
          lhs = lp_norm(diff_grid(fejer_mean(fhat, n), f), p);
          rhs = fejer_rhs(mp, n, g);
        } else {
          lhs = lp_norm(diff_grid(t_mean(fhat, w, n), f), p);
          if (id == "1") {
            rhs = thm1_rhs(mp, w, n, g);
          } else {
            const Thm2Rhs r2 = thm2_rhs(mp, w, n, g);
            rhs = r2.rhs;
            if (r2.scaled_sum > 0.0)
              scaled_ratios.emplace_back(n, lhs / r2.scaled_sum);
          }
        }
        report.rows.push_back(make_row(id, sel, p, n, lhs, rhs));
      }
      if (id == "2" && !scaled_ratios.empty()) {
        // boundedness proxy: across the top half of the n range the
        // constant-free ratio may vary by less than a factor 10
        const std::uint64_t half = (1 + (size - 1)) / 2;
        double lo = INFINITY, hi = 0.0;
        for (const auto& [n, r] : scaled_ratios) {
          scaled_sup = std::max(scaled_sup, r);
          if (n >= half) {
            lo = std::min(lo, r);
            hi = std::max(hi, r);
          }
        }
        const double factor = lo > 0.0 ? hi / lo : INFINITY;
        scaled_factor = std::max(scaled_factor, factor);
        if (!(factor < 10.0)) scaled_pass = false;
      }
    }
  }

  if (id == "2") {
    report.extras["scaled_sup"] = scaled_sup;
    report.extras["scaled_tophalf_factor"] = scaled_factor;
    report.extras["scaled_pass"] = scaled_pass ? 1.0 : 0.0;
  }
  return report;
}

KernelReport run_kernel_suite(GroupPtr spec, const std::string& weights_kind) {
  const GroupSpec& g = *spec;
  const std::uint64_t size = g.size();
  const std::size_t L = g.level();
  const WeightSeq w = WeightSeq::make(weights_kind, size);

  KernelReport report;
  report.group = g.format();
  report.weights = weights_kind;

  // closed form of D_{M_s}: M_s on I_s, 0 elsewhere
  for (std::size_t s = 0; s <= L; ++s) {
    const std::uint64_t Ms = g.gen_power(s);
    const GridFunction d = dirichlet_kernel(spec, Ms);
    double res = 0.0;
    for (std::uint64_t x = 0; x < size; ++x) {
      const cdouble want = x % Ms == 0 ? cdouble(static_cast<double>(Ms), 0.0)
                                       : cdouble(0.0, 0.0);
      res = std::max(res, std::abs(d.values[x] - want));
    }
    report.rows.push_back(
        {"dirichlet_closed_form", Ms, res, kIdentityTol, res <= kIdentityTol});
  }

  // three-branch closed form of K_{M_s}
  for (std::size_t s = 0; s <= L; ++s) {
    const std::uint64_t Ms = g.gen_power(s);
    const GridFunction lhs = fejer_kernel(spec, Ms);
    const GridFunction rhs = fejer_mn_closed(spec, s);
    double res = 0.0;
    for (std::uint64_t x = 0; x < size; ++x)
      res = std::max(res, std::abs(lhs.values[x] - rhs.values[x]));
    report.rows.push_back(
        {"fejer_closed_form", Ms, res, kIdentityTol, res <= kIdentityTol});
  }

  // complement identity, all j < M_s (levels capped so the sweep stays
  // quadratic in a small factor)
  for (std::size_t s = 1; s <= L && g.gen_power(s) <= 256; ++s) {
    const std::uint64_t Ms = g.gen_power(s);
    double res = 0.0;
    for (std::uint64_t j = 0; j < Ms; ++j)
      res = std::max(res, dirichlet_complement_residual(spec, s, j));
    report.rows.push_back(
        {"dirichlet_complement", Ms, res, kIdentityTol, res <= kIdentityTol});
  }

  // Fejer kernel bounds: integral 1, L1 below R^5, and the pointwise
  // majorization by the subsequence kernels
  const double R = static_cast<double>(g.bound());
  const double l1_bound = R * R * R * R * R;
  // rhs_prefix[t][x] = 2R^2 sum_{l<=t} M_l |K_{M_l}(x)|
  std::vector<std::vector<double>> rhs_prefix(L + 1);
  {
    std::vector<double> acc(size, 0.0);
    for (std::size_t l = 0; l <= L; ++l) {
      const GridFunction km = fejer_kernel(spec, g.gen_power(l));
      const double Ml = static_cast<double>(g.gen_power(l));
      for (std::uint64_t x = 0; x < size; ++x)
        acc[x] += 2.0 * R * R * Ml * std::abs(km.values[x]);
      rhs_prefix[l] = acc;
    }
  }
  for (std::uint64_t n = 1; n <= size; ++n) {
    const GridFunction k = fejer_kernel(spec, n);
    const double integral_res = std::abs(haar_integral(k) - cdouble{1.0, 0.0});
    report.rows.push_back({"fejer_integral", n, integral_res, kIdentityTol,
                           integral_res <= kIdentityTol});
    const double l1 = lp_norm(k, 1.0);
    report.rows.push_back({"fejer_l1", n, l1, l1_bound, l1 <= l1_bound});
    if (n < size) {
      const std::size_t order = block_index(g, n);
      double res = -INFINITY;
      const std::vector<double>& rhs = rhs_prefix[order];
      for (std::uint64_t x = 0; x < size; ++x)
        res = std::max(res, static_cast<double>(n) * std::abs(k.values[x]) -
                                rhs[x]);
      report.rows.push_back({"fejer_pointwise", n, res, 0.0,
                             res <= 1e-9 * (1.0 + static_cast<double>(n))});
    }
  }

  // t-kernel integral: (Q_n - q_0)/Q_n
  for (std::uint64_t n = 1; n <= size; ++n) {
    const GridFunction f = t_kernel(spec, w, n);
    const double want = (w.partial(n) - w.q(0)) / w.partial(n);
    const double res = std::abs(haar_integral(f) - cdouble{want, 0.0});
    report.rows.push_back(
        {"tkernel_integral", n, res, kIdentityTol, res <= kIdentityTol});
  }

  return report;
}

double default_rate_target(double alpha, const std::string& weights_kind) {
  double beta = 0.0;
  if (weights_kind.rfind("pow:", 0) == 0) {
    const double gamma = parse_number(weights_kind.substr(4), "gamma");
    if (gamma < 0.0) beta = -gamma;
  } else if (weights_kind != "const" &&
             weights_kind.rfind("logpow:", 0) != 0) {
    throw std::invalid_argument(
        "no default rate target for weights '" + weights_kind +
        "'; pass an explicit target");
  }
  if (beta >= 1.0)
    throw std::invalid_argument(
        "weights decay too fast for a power-law target (beta >= 1); pass an "
        "explicit target");
  return -std::min(alpha, 1.0 - beta);
}

RateReport run_rate_suite(const RateConfig& cfg) {
  GroupPtr spec = GroupSpec::create_cyclic({2}, cfg.level, cfg.max_grid);
  const WeightSeq w = WeightSeq::make(cfg.weights_kind, spec->size());
  const GridFunction f = lip_function(cfg.alpha, spec);
  const Spectrum fhat = analyze(f);

  RateReport report;
  report.group = spec->format();
  report.weights = cfg.weights_kind;
  report.alpha = cfg.alpha;
  report.p = cfg.p;
  report.tol = cfg.tol;
  report.target = std::isnan(cfg.target)
                      ? default_rate_target(cfg.alpha, cfg.weights_kind)
                      : cfg.target;

  for (std::size_t lvl = 1; lvl <= spec->level(); ++lvl) {
    const std::uint64_t n = spec->gen_power(lvl);
    const double err = lp_norm(diff_grid(t_mean(fhat, w, n), f), cfg.p);
    report.errors.emplace_back(n, err);
  }
  const RateFit fit = rate_fit(report.errors);
  report.slope = fit.slope;
  report.r2 = fit.r2;
  report.pass = std::abs(report.slope - report.target) <= report.tol;
  return report;
}

double negative_probe(GroupPtr spec, std::size_t n_level, double p) {
  if (n_level < 1 || n_level > spec->level())
    throw std::out_of_range("level out of range");
  const GridFunction f = character_grid(spec, 1);
  const std::uint64_t Mn = spec->gen_power(n_level);
  const GridFunction s = fejer_mean(f, Mn);
  return static_cast<double>(Mn) * lp_norm(diff_grid(s, f), p);
}

}  // namespace vilenkin
