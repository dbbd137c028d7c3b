#include "vilenkin/vilenkin.h"

#include <cstring>
#include <fstream>
#include <sstream>

#include "report.hpp"
#include "rng.hpp"
#include "verify.hpp"

using namespace vilenkin;

struct vil_group {
  GroupPtr spec;
};
struct vil_grid {
  GridFunction f;
};
struct vil_spectrum {
  Spectrum s;
};
struct vil_weights {
  WeightSeq w;
};
struct vil_report {
  VerificationReport r;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

template <typename Fn>
vil_status guarded(Fn&& fn) {
  try {
    fn();
    return VIL_OK;
  } catch (const GridLimitError& e) {
    set_error(e.what());
    return VIL_ERR_LIMIT;
  } catch (const IoError& e) {
    set_error(e.what());
    return VIL_ERR_IO;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return VIL_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return VIL_ERR_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    set_error(e.what());
    return VIL_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(e.what());
    return VIL_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return VIL_ERR_INTERNAL;
  }
}

vil_status require(bool ok, const char* msg) {
  if (ok) return VIL_OK;
  set_error(msg);
  return VIL_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string slurp(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(std::string("cannot open '") + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError(std::string("failed reading '") + path + "'");
  return ss.str();
}

void write_verification_output(const VerificationReport& r,
                               const char* out_path, const char* format) {
  if (!out_path) return;
  const std::string fmt = format ? format : "csv";
  if (fmt == "csv")
    atomic_write_file(out_path, report_csv(r));
  else if (fmt == "json")
    atomic_write_file(out_path, report_json(r));
  else
    throw std::invalid_argument("format must be csv or json");
}

void write_kernel_output(const KernelReport& r, const char* out_path,
                         const char* format) {
  if (!out_path) return;
  const std::string fmt = format ? format : "csv";
  if (fmt == "csv")
    atomic_write_file(out_path, report_csv(r));
  else if (fmt == "json")
    atomic_write_file(out_path, report_json(r));
  else
    throw std::invalid_argument("format must be csv or json");
}

}  // namespace

extern "C" {

const char* vil_last_error(void) { return g_last_error.c_str(); }

const char* vil_version(void) { return "1.0.0"; }

uint64_t vil_default_max_grid(void) { return GroupSpec::kDefaultMaxGrid; }

/* ---- group ------------------------------------------------------------ */

vil_status vil_group_parse(const char* text, uint64_t max_grid,
                           vil_group** out) {
  if (auto st = require(text && out, "null argument")) return st;
  return guarded([&] { *out = new vil_group{GroupSpec::parse(text, max_grid)}; });
}

vil_status vil_group_create(const uint32_t* radices, size_t count,
                            size_t level, uint64_t max_grid, vil_group** out) {
  if (auto st = require(radices && count > 0 && out, "null argument"))
    return st;
  return guarded([&] {
    std::vector<std::uint32_t> pattern(radices, radices + count);
    *out = new vil_group{GroupSpec::create_cyclic(pattern, level, max_grid)};
  });
}

void vil_group_free(vil_group* g) { delete g; }

size_t vil_group_level(const vil_group* g) { return g ? g->spec->level() : 0; }

uint64_t vil_group_size(const vil_group* g) { return g ? g->spec->size() : 0; }

uint32_t vil_group_bound(const vil_group* g) {
  return g ? g->spec->bound() : 0;
}

vil_status vil_group_radix(const vil_group* g, size_t k, uint32_t* out) {
  if (auto st = require(g && out, "null argument")) return st;
  return guarded([&] { *out = g->spec->radix(k); });
}

vil_status vil_group_gen_power(const vil_group* g, size_t k, uint64_t* out) {
  if (auto st = require(g && out, "null argument")) return st;
  return guarded([&] { *out = g->spec->gen_power(k); });
}

vil_status vil_group_format(const vil_group* g, char* buf, size_t cap) {
  if (auto st = require(g && buf, "null argument")) return st;
  return guarded([&] {
    const std::string s = g->spec->format();
    if (s.size() + 1 > cap)
      throw std::invalid_argument("buffer too small for group spec string");
    std::memcpy(buf, s.c_str(), s.size() + 1);
  });
}

/* ---- grid functions and spectra ---------------------------------------- */

vil_status vil_grid_zero(const vil_group* g, vil_grid** out) {
  if (auto st = require(g && out, "null argument")) return st;
  return guarded([&] { *out = new vil_grid{zero_grid(g->spec)}; });
}

vil_status vil_grid_constant(const vil_group* g, double re, double im,
                             vil_grid** out) {
  if (auto st = require(g && out, "null argument")) return st;
  return guarded([&] { *out = new vil_grid{constant_grid(g->spec, {re, im})}; });
}

vil_status vil_grid_character(const vil_group* g, uint64_t k, vil_grid** out) {
  if (auto st = require(g && out, "null argument")) return st;
  return guarded([&] { *out = new vil_grid{character_grid(g->spec, k)}; });
}

vil_status vil_grid_random(const vil_group* g, uint64_t seed, int mean_zero,
                           vil_grid** out) {
  if (auto st = require(g && out, "null argument")) return st;
  return guarded(
      [&] { *out = new vil_grid{random_grid(g->spec, seed, mean_zero != 0)}; });
}

vil_status vil_grid_lip(const vil_group* g, double alpha, vil_grid** out) {
  if (auto st = require(g && out, "null argument")) return st;
  return guarded([&] { *out = new vil_grid{lip_function(alpha, g->spec)}; });
}

vil_status vil_grid_from_values(const vil_group* g, const double* re,
                                const double* im, uint64_t count,
                                vil_grid** out) {
  if (auto st = require(g && re && im && out, "null argument")) return st;
  return guarded([&] {
    if (count != g->spec->size())
      throw std::invalid_argument("value count must equal M_L");
    GridFunction f = zero_grid(g->spec);
    for (std::uint64_t i = 0; i < count; ++i) f.values[i] = {re[i], im[i]};
    require_finite(f.values);
    *out = new vil_grid{std::move(f)};
  });
}

uint64_t vil_grid_size(const vil_grid* f) { return f ? f->f.values.size() : 0; }

vil_status vil_grid_values(const vil_grid* f, double* re, double* im) {
  if (auto st = require(f && re && im, "null argument")) return st;
  for (std::size_t i = 0; i < f->f.values.size(); ++i) {
    re[i] = f->f.values[i].real();
    im[i] = f->f.values[i].imag();
  }
  return VIL_OK;
}

void vil_grid_free(vil_grid* f) { delete f; }

uint64_t vil_spectrum_size(const vil_spectrum* s) {
  return s ? s->s.coeffs.size() : 0;
}

vil_status vil_spectrum_values(const vil_spectrum* s, double* re, double* im) {
  if (auto st = require(s && re && im, "null argument")) return st;
  for (std::size_t i = 0; i < s->s.coeffs.size(); ++i) {
    re[i] = s->s.coeffs[i].real();
    im[i] = s->s.coeffs[i].imag();
  }
  return VIL_OK;
}

void vil_spectrum_free(vil_spectrum* s) { delete s; }

vil_status vil_grid_to_json(const vil_grid* f, char** out) {
  if (auto st = require(f && out, "null argument")) return st;
  return guarded([&] { *out = dup_string(to_json(f->f)); });
}

vil_status vil_grid_from_json(const char* json, uint64_t max_grid,
                              vil_grid** out) {
  if (auto st = require(json && out, "null argument")) return st;
  return guarded([&] { *out = new vil_grid{grid_from_json(json, max_grid)}; });
}

vil_status vil_spectrum_to_json(const vil_spectrum* s, char** out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] { *out = dup_string(to_json(s->s)); });
}

vil_status vil_spectrum_from_json(const char* json, uint64_t max_grid,
                                  vil_spectrum** out) {
  if (auto st = require(json && out, "null argument")) return st;
  return guarded(
      [&] { *out = new vil_spectrum{spectrum_from_json(json, max_grid)}; });
}

void vil_string_free(char* s) { delete[] s; }

/* ---- transforms --------------------------------------------------------- */

vil_status vil_analyze(const vil_grid* f, vil_spectrum** out) {
  if (auto st = require(f && out, "null argument")) return st;
  return guarded([&] { *out = new vil_spectrum{analyze(f->f)}; });
}

vil_status vil_synthesize(const vil_spectrum* s, vil_grid** out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] { *out = new vil_grid{synthesize(s->s)}; });
}

vil_status vil_partial_sum(const vil_grid* f, uint64_t n, vil_grid** out) {
  if (auto st = require(f && out, "null argument")) return st;
  return guarded([&] { *out = new vil_grid{partial_sum(f->f, n)}; });
}

vil_status vil_convolve(const vil_grid* f, const vil_grid* g, vil_grid** out) {
  if (auto st = require(f && g && out, "null argument")) return st;
  return guarded([&] { *out = new vil_grid{convolve(f->f, g->f)}; });
}

vil_status vil_lp_norm(const vil_grid* f, double p, double* out) {
  if (auto st = require(f && out, "null argument")) return st;
  return guarded([&] { *out = lp_norm(f->f, p); });
}

vil_status vil_haar_integral(const vil_grid* f, double* re, double* im) {
  if (auto st = require(f && re && im, "null argument")) return st;
  return guarded([&] {
    const cdouble v = haar_integral(f->f);
    *re = v.real();
    *im = v.imag();
  });
}

vil_status vil_modulus(const vil_grid* f, double p, size_t s, double* out) {
  if (auto st = require(f && out, "null argument")) return st;
  return guarded([&] { *out = modulus(f->f, p, s); });
}

/* ---- weights ------------------------------------------------------------ */

vil_status vil_weights_make(const char* kind, uint64_t nmax,
                            vil_weights** out) {
  if (auto st = require(kind && out, "null argument")) return st;
  return guarded([&] { *out = new vil_weights{WeightSeq::make(kind, nmax)}; });
}

void vil_weights_free(vil_weights* w) { delete w; }

vil_status vil_weights_q(const vil_weights* w, uint64_t k, double* out) {
  if (auto st = require(w && out, "null argument")) return st;
  return guarded([&] { *out = w->w.q(k); });
}

vil_status vil_weights_partial(const vil_weights* w, uint64_t n, double* out) {
  if (auto st = require(w && out, "null argument")) return st;
  return guarded([&] { *out = w->w.partial(n); });
}

int vil_weights_class(const vil_weights* w) {
  if (!w) return 2;
  switch (w->w.cls()) {
    case WeightClass::non_increasing: return 0;
    case WeightClass::non_decreasing: return 1;
    case WeightClass::other: return 2;
  }
  return 2;
}

int vil_weights_is_non_increasing(const vil_weights* w) {
  return w && w->w.non_increasing() ? 1 : 0;
}

int vil_weights_is_non_decreasing(const vil_weights* w) {
  return w && w->w.non_decreasing() ? 1 : 0;
}

int vil_weights_regular(const vil_weights* w) {
  return w && w->w.regular_proxy() ? 1 : 0;
}

vil_status vil_weights_cond2_sup(const vil_weights* w, double* out) {
  if (auto st = require(w && out, "null argument")) return st;
  *out = w->w.cond2_sup();
  return VIL_OK;
}

/* ---- kernels ------------------------------------------------------------ */

vil_status vil_dirichlet_kernel(const vil_group* g, uint64_t n,
                                vil_grid** out) {
  if (auto st = require(g && out, "null argument")) return st;
  return guarded([&] { *out = new vil_grid{dirichlet_kernel(g->spec, n)}; });
}

vil_status vil_fejer_kernel(const vil_group* g, uint64_t n, vil_grid** out) {
  if (auto st = require(g && out, "null argument")) return st;
  return guarded([&] { *out = new vil_grid{fejer_kernel(g->spec, n)}; });
}

vil_status vil_fejer_mn_closed(const vil_group* g, size_t s, vil_grid** out) {
  if (auto st = require(g && out, "null argument")) return st;
  return guarded([&] { *out = new vil_grid{fejer_mn_closed(g->spec, s)}; });
}

vil_status vil_t_kernel(const vil_group* g, const vil_weights* w, uint64_t n,
                        vil_grid** out) {
  if (auto st = require(g && w && out, "null argument")) return st;
  return guarded([&] { *out = new vil_grid{t_kernel(g->spec, w->w, n)}; });
}

vil_status vil_dirichlet_complement_residual(const vil_group* g, size_t n,
                                             uint64_t j, double* out) {
  if (auto st = require(g && out, "null argument")) return st;
  return guarded(
      [&] { *out = dirichlet_complement_residual(g->spec, n, j); });
}

/* ---- summability means --------------------------------------------------- */

vil_status vil_fejer_mean(const vil_grid* f, uint64_t n, vil_grid** out) {
  if (auto st = require(f && out, "null argument")) return st;
  return guarded([&] { *out = new vil_grid{fejer_mean(f->f, n)}; });
}

vil_status vil_t_mean(const vil_grid* f, const vil_weights* w, uint64_t n,
                      vil_grid** out) {
  if (auto st = require(f && w && out, "null argument")) return st;
  return guarded([&] { *out = new vil_grid{t_mean(f->f, w->w, n)}; });
}

vil_status vil_norlund_mean(const vil_grid* f, const vil_weights* w,
                            uint64_t n, vil_grid** out) {
  if (auto st = require(f && w && out, "null argument")) return st;
  return guarded([&] { *out = new vil_grid{norlund_mean(f->f, w->w, n)}; });
}

vil_status vil_t_mean_abel(const vil_grid* f, const vil_weights* w, uint64_t n,
                           vil_grid** out) {
  if (auto st = require(f && w && out, "null argument")) return st;
  return guarded([&] { *out = new vil_grid{t_mean_abel(f->f, w->w, n)}; });
}

/* ---- approximation bounds ------------------------------------------------ */

vil_status vil_thm1_rhs(const vil_grid* f, double p, const vil_weights* w,
                        uint64_t n, double* out) {
  if (auto st = require(f && w && out, "null argument")) return st;
  return guarded([&] {
    const ModulusProfile mp = modulus_profile(f->f, p);
    *out = thm1_rhs(mp, w->w, n, *f->f.spec);
  });
}

vil_status vil_thm2_rhs(const vil_grid* f, double p, const vil_weights* w,
                        uint64_t n, double* rhs, double* scaled_sum) {
  if (auto st = require(f && w && rhs && scaled_sum, "null argument"))
    return st;
  return guarded([&] {
    const ModulusProfile mp = modulus_profile(f->f, p);
    const Thm2Rhs r = thm2_rhs(mp, w->w, n, *f->f.spec);
    *rhs = r.rhs;
    *scaled_sum = r.scaled_sum;
  });
}

vil_status vil_thm3_rhs(const vil_grid* f, double p, const vil_weights* w,
                        size_t n_level, double* out) {
  if (auto st = require(f && w && out, "null argument")) return st;
  return guarded([&] {
    const ModulusProfile mp = modulus_profile(f->f, p);
    *out = thm3_rhs(mp, w->w, n_level, *f->f.spec);
  });
}

vil_status vil_fejer_rhs(const vil_grid* f, double p, uint64_t n, double* out) {
  if (auto st = require(f && out, "null argument")) return st;
  return guarded([&] {
    const ModulusProfile mp = modulus_profile(f->f, p);
    *out = fejer_rhs(mp, n, *f->f.spec);
  });
}

vil_status vil_rate_fit(const uint64_t* n, const double* err, size_t count,
                        double* slope, double* r2) {
  if (auto st = require(n && err && slope && r2, "null argument")) return st;
  return guarded([&] {
    std::vector<std::pair<std::uint64_t, double>> series;
    series.reserve(count);
    for (size_t i = 0; i < count; ++i) series.emplace_back(n[i], err[i]);
    const RateFit fit = rate_fit(series);
    *slope = fit.slope;
    *r2 = fit.r2;
  });
}

/* ---- verification suites -------------------------------------------------- */

vil_status vil_verify_kernels(const char* group, const char* weights_kind,
                              const char* out_path, const char* format,
                              uint64_t max_grid, int* all_pass) {
  if (auto st = require(group && all_pass, "null argument")) return st;
  return guarded([&] {
    GroupPtr spec = GroupSpec::parse(group, max_grid);
    const KernelReport report =
        run_kernel_suite(spec, weights_kind ? weights_kind : "const");
    write_kernel_output(report, out_path, format);
    *all_pass = report.all_pass() ? 1 : 0;
  });
}

vil_status vil_verify_theorem(const char* id, const char* group,
                              const char* weights_kind, const double* pvals,
                              size_t np, const char* const* functions,
                              size_t nf, const char* out_path,
                              const char* format, uint64_t max_grid,
                              vil_report** out) {
  if (auto st = require(id && group && pvals && np > 0 && functions && nf > 0,
                        "null argument"))
    return st;
  return guarded([&] {
    TheoremConfig cfg;
    cfg.spec = GroupSpec::parse(group, max_grid);
    cfg.weights_kind = weights_kind ? weights_kind : "const";
    cfg.pvals.assign(pvals, pvals + np);
    cfg.functions.assign(functions, functions + nf);
    VerificationReport report = run_theorem_suite(id, cfg);
    write_verification_output(report, out_path, format);
    if (out) *out = new vil_report{std::move(report)};
  });
}

size_t vil_report_row_count(const vil_report* r) {
  return r ? r->r.rows.size() : 0;
}

int vil_report_all_pass(const vil_report* r) {
  return r && r->r.all_pass() ? 1 : 0;
}

vil_status vil_report_max_ratio(const vil_report* r, double* out) {
  if (auto st = require(r && out, "null argument")) return st;
  *out = r->r.max_ratio();
  return VIL_OK;
}

vil_status vil_report_extra(const vil_report* r, const char* key, double* out) {
  if (auto st = require(r && key && out, "null argument")) return st;
  auto it = r->r.extras.find(key);
  if (it == r->r.extras.end()) {
    set_error(std::string("no report diagnostic named '") + key + "'");
    return VIL_ERR_INVALID_ARGUMENT;
  }
  *out = it->second;
  return VIL_OK;
}

void vil_report_free(vil_report* r) { delete r; }

vil_status vil_run_rates(double alpha, const char* weights_kind, size_t level,
                         double p, double tol, double target,
                         const char* out_path, uint64_t max_grid,
                         double* slope, double* r2, int* pass) {
  if (auto st = require(weights_kind && slope && r2 && pass, "null argument"))
    return st;
  return guarded([&] {
    RateConfig cfg;
    cfg.level = level;
    cfg.alpha = alpha;
    cfg.weights_kind = weights_kind;
    cfg.p = p;
    cfg.tol = tol;
    cfg.target = target;
    cfg.max_grid = max_grid;
    const RateReport report = run_rate_suite(cfg);
    if (out_path) atomic_write_file(out_path, report_csv(report));
    *slope = report.slope;
    *r2 = report.r2;
    *pass = report.pass ? 1 : 0;
  });
}

vil_status vil_transform_file(const char* in_path, const char* out_path,
                              uint64_t max_grid) {
  if (auto st = require(in_path && out_path, "null argument")) return st;
  return guarded([&] {
    const std::string text = slurp(in_path);
    std::string out_text;
    if (json_doc_kind(text) == DocKind::grid)
      out_text = to_json(analyze(grid_from_json(text, max_grid)));
    else
      out_text = to_json(synthesize(spectrum_from_json(text, max_grid)));
    atomic_write_file(out_path, out_text);
  });
}

} /* extern "C" */
