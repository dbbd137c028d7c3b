// Command-line driver for the vilenkin shared library. Talks to the C API
// only. Exit codes: 0 all checks passed, 1 assertion/IO failure, 2 bad
// usage or configuration.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vilenkin/vilenkin.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

uint64_t max_grid_from_env() {
  const char* raw = std::getenv("VILENKIN_MAX_GRID");
  if (!raw || !*raw) return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) {
    std::fprintf(stderr, "vilenkin: bad VILENKIN_MAX_GRID '%s'\n", raw);
    std::exit(kExitUsage);
  }
  return v;
}

int status_exit(vil_status st) {
  if (st == VIL_OK) return kExitPass;
  std::fprintf(stderr, "vilenkin: %s\n", vil_last_error());
  return st == VIL_ERR_IO || st == VIL_ERR_INTERNAL ? kExitFail : kExitUsage;
}

struct VerifyKernelsArgs {
  std::string group;
  std::string weights = "const";
  std::string out;
  std::string format = "csv";
};

struct VerifyTheoremArgs {
  std::string id;
  std::string group;
  std::string weights = "const";
  std::vector<double> pvals;
  std::vector<std::string> functions;
  std::string out;
  std::string format = "csv";
};

struct RatesArgs {
  double alpha = 0.5;
  std::string weights = "const";
  std::size_t level = 14;
  double p = 1.0;
  double tol = 0.15;
  double target = NAN;
  std::string out;
};

struct TransformArgs {
  std::string in;
  std::string out;
};

int run_verify_kernels(const VerifyKernelsArgs& a, uint64_t max_grid) {
  int all_pass = 0;
  const vil_status st = vil_verify_kernels(
      a.group.c_str(), a.weights.c_str(), a.out.empty() ? nullptr : a.out.c_str(),
      a.format.c_str(), max_grid, &all_pass);
  if (st != VIL_OK) return status_exit(st);
  std::printf("kernel identities on %s: %s\n", a.group.c_str(),
              all_pass ? "all pass" : "FAILED");
  return all_pass ? kExitPass : kExitFail;
}

int run_verify_theorem(const VerifyTheoremArgs& a, uint64_t max_grid) {
  std::vector<const char*> fsel;
  fsel.reserve(a.functions.size());
  for (const std::string& s : a.functions) fsel.push_back(s.c_str());

  vil_report* report = nullptr;
  const vil_status st = vil_verify_theorem(
      a.id.c_str(), a.group.c_str(), a.weights.c_str(), a.pvals.data(),
      a.pvals.size(), fsel.data(), fsel.size(),
      a.out.empty() ? nullptr : a.out.c_str(), a.format.c_str(), max_grid,
      &report);
  if (st != VIL_OK) return status_exit(st);

  double max_ratio = 0.0;
  vil_report_max_ratio(report, &max_ratio);
  const int all_pass = vil_report_all_pass(report);
  std::printf("theorem %s on %s, weights %s: %zu rows, max ratio %.6g, %s\n",
              a.id.c_str(), a.group.c_str(), a.weights.c_str(),
              vil_report_row_count(report), max_ratio,
              all_pass ? "all pass" : "FAILED");
  if (a.id == "2") {
    double sup = 0.0, factor = 0.0;
    if (vil_report_extra(report, "scaled_sup", &sup) == VIL_OK &&
        vil_report_extra(report, "scaled_tophalf_factor", &factor) == VIL_OK) {
      std::printf("cond0: observed sup ratio %.6g, top-half variation factor "
                  "%.6g (asserted < 10)\n",
                  sup, factor);
    }
  }
  vil_report_free(report);
  return all_pass ? kExitPass : kExitFail;
}

int run_rates(const RatesArgs& a, uint64_t max_grid) {
  double slope = 0.0, r2 = 0.0;
  int pass = 0;
  const vil_status st = vil_run_rates(
      a.alpha, a.weights.c_str(), a.level, a.p, a.tol, a.target,
      a.out.empty() ? nullptr : a.out.c_str(), max_grid, &slope, &r2, &pass);
  if (st != VIL_OK) return status_exit(st);
  std::printf("rates alpha=%g weights=%s L=%zu p=%g: slope %.6g (r2 %.6g), "
              "tol %.3g: %s\n",
              a.alpha, a.weights.c_str(), a.level, a.p, slope, r2, a.tol,
              pass ? "pass" : "FAILED");
  return pass ? kExitPass : kExitFail;
}

int run_transform(const TransformArgs& a, uint64_t max_grid) {
  const vil_status st =
      vil_transform_file(a.in.c_str(), a.out.c_str(), max_grid);
  if (st != VIL_OK) return status_exit(st);
  std::printf("wrote %s\n", a.out.c_str());
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation and verification on bounded Vilenkin groups"};
  app.require_subcommand(1);
  const uint64_t max_grid = max_grid_from_env();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);

  VerifyKernelsArgs ka;
  auto* kernels = verify->add_subcommand("kernels", "kernel identity suite");
  kernels->add_option("--group", ka.group, "group spec, e.g. m=2,3,4;L=5")
      ->required();
  kernels->add_option("--weights", ka.weights, "weight kind for the t-kernel");
  kernels->add_option("--out", ka.out, "report path (written atomically)");
  kernels->add_option("--format", ka.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  VerifyTheoremArgs ta;
  auto* theorem = verify->add_subcommand("theorem", "inequality ratio suite");
  theorem->add_option("--id", ta.id, "1, 2, 3 or fejer")
      ->required()
      ->check(CLI::IsMember({"1", "2", "3", "fejer"}));
  theorem->add_option("--group", ta.group, "group spec")->required();
  theorem->add_option("--weights", ta.weights, "weight kind");
  theorem->add_option("--p", ta.pvals, "Lebesgue exponents (repeatable)");
  theorem->add_option("--f", ta.functions,
                      "function selectors random:<seed> | lip:<alpha> | "
                      "char:<k> (repeatable)");
  theorem->add_option("--out", ta.out, "report path");
  theorem->add_option("--format", ta.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  RatesArgs ra;
  auto* rates = app.add_subcommand("rates", "convergence-rate experiment");
  rates->add_option("--alpha", ra.alpha, "Lipschitz exponent")->required();
  rates->add_option("--weights", ra.weights, "weight kind");
  rates->add_option("--L", ra.level, "Walsh depth (grid 2^L)");
  rates->add_option("--p", ra.p, "Lebesgue exponent");
  rates->add_option("--tol", ra.tol, "slope tolerance");
  rates->add_option("--target", ra.target,
                    "expected slope (default derived from alpha and weights)");
  rates->add_option("--out", ra.out, "n,err CSV path");

  TransformArgs xa;
  auto* transform =
      app.add_subcommand("transform", "analyze/synthesize a JSON document");
  transform->add_option("--in", xa.in, "input JSON path")->required();
  transform->add_option("--out", xa.out, "output JSON path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (ta.pvals.empty()) ta.pvals = {1.0, 2.0};
  if (ta.functions.empty()) ta.functions = {"random:1"};

  if (kernels->parsed()) return run_verify_kernels(ka, max_grid);
  if (theorem->parsed()) return run_verify_theorem(ta, max_grid);
  if (rates->parsed()) return run_rates(ra, max_grid);
  if (transform->parsed()) return run_transform(xa, max_grid);
  return kExitUsage;
}
