#include "spectral.hpp"

#include <cmath>

namespace vilenkin {

namespace {

using cldouble = std::complex<long double>;

// One size-m DFT per digit axis, applied in place over the rank layout
// (axis k has stride M_k, extent m_k). conjugate=true analyzes, false
// synthesizes. Inner sums accumulate in long double so that closed-form
// kernel identities stay below 1e-12 absolute even on grids of a few
// thousand points.
void axis_transforms(const GroupSpec& g, std::vector<cdouble>& a,
                     bool conjugate) {
  const std::uint64_t total = g.size();
  std::vector<cdouble> tmp;
  for (std::size_t k = 0; k < g.level(); ++k) {
    const std::uint32_t m = g.radix(k);
    const std::uint64_t stride = g.gen_power(k);
    const std::uint64_t block = stride * m;
    if (m == 2) {
      // radix-2 butterfly; the twiddle -1 needs no table
      for (std::uint64_t base0 = 0; base0 < total; base0 += block) {
        for (std::uint64_t lo = 0; lo < stride; ++lo) {
          cdouble& u = a[base0 + lo];
          cdouble& v = a[base0 + lo + stride];
          const cdouble s = u + v;
          const cdouble d = u - v;
          u = s;
          v = d;
        }
      }
      continue;
    }
    tmp.resize(m);
    for (std::uint64_t base0 = 0; base0 < total; base0 += block) {
      for (std::uint64_t lo = 0; lo < stride; ++lo) {
        const std::uint64_t base = base0 + lo;
        for (std::uint32_t d = 0; d < m; ++d) {
          cldouble acc{0.0L, 0.0L};
          for (std::uint32_t j = 0; j < m; ++j) {
            const cdouble& w = g.root(k, static_cast<std::uint32_t>(
                                             (std::uint64_t(d) * j) % m));
            const cdouble& v = a[base + j * stride];
            const long double wr = w.real();
            const long double wi = conjugate ? -w.imag() : w.imag();
            acc += cldouble(v.real() * wr - v.imag() * wi,
                            v.real() * wi + v.imag() * wr);
          }
          tmp[d] = {static_cast<double>(acc.real()),
                    static_cast<double>(acc.imag())};
        }
        for (std::uint32_t d = 0; d < m; ++d) a[base + d * stride] = tmp[d];
      }
    }
  }
}

}  // namespace

cdouble psi(const GroupSpec& g, std::uint64_t n, std::uint64_t x) {
  if (n >= g.size()) throw std::out_of_range("character index n out of range");
  cdouble v{1.0, 0.0};
  for (std::size_t k = 0; k < g.level() && n != 0; ++k) {
    const std::uint32_t m = g.radix(k);
    const std::uint32_t nk = static_cast<std::uint32_t>(n % m);
    const std::uint32_t xk = static_cast<std::uint32_t>(x % m);
    n /= m;
    x /= m;
    if (nk != 0 && xk != 0)
      v *= g.root(k, static_cast<std::uint32_t>((std::uint64_t(nk) * xk) % m));
  }
  return v;
}

GridFunction character_grid(GroupPtr spec, std::uint64_t n) {
  GridFunction f = zero_grid(spec);
  for (std::uint64_t x = 0; x < spec->size(); ++x) f.values[x] = psi(*spec, n, x);
  return f;
}

Spectrum analyze(const GridFunction& f) {
  Spectrum s;
  s.spec = f.spec;
  s.coeffs = f.values;
  axis_transforms(*f.spec, s.coeffs, /*conjugate=*/true);
  const double inv = 1.0 / static_cast<double>(f.spec->size());
  for (cdouble& c : s.coeffs) c *= inv;
  return s;
}

GridFunction synthesize(const Spectrum& s) {
  GridFunction f;
  f.spec = s.spec;
  f.values = s.coeffs;
  axis_transforms(*s.spec, f.values, /*conjugate=*/false);
  return f;
}

GridFunction partial_sum(const Spectrum& fhat, std::uint64_t n) {
  if (n > fhat.spec->size())
    throw std::out_of_range("partial sum order n out of range (n <= M_L)");
  Spectrum head;
  head.spec = fhat.spec;
  head.coeffs.assign(fhat.spec->size(), cdouble{0.0, 0.0});
  for (std::uint64_t k = 0; k < n; ++k) head.coeffs[k] = fhat.coeffs[k];
  return synthesize(head);
}

GridFunction partial_sum(const GridFunction& f, std::uint64_t n) {
  return partial_sum(analyze(f), n);
}

double lp_norm(const GridFunction& f, double p) {
  if (!(p >= 1.0 && p <= 64.0))
    throw std::domain_error("p must lie in [1, 64]");
  long double acc = 0.0L;
  if (p == 1.0) {
    for (const cdouble& z : f.values) acc += std::abs(z);
  } else if (p == 2.0) {
    for (const cdouble& z : f.values) acc += std::norm(z);
  } else {
    for (const cdouble& z : f.values)
      acc += std::pow<long double>(std::abs(z), p);
  }
  acc /= static_cast<long double>(f.values.size());
  return static_cast<double>(std::pow(acc, 1.0L / static_cast<long double>(p)));
}

cdouble haar_integral(const GridFunction& f) {
  cldouble acc{0.0L, 0.0L};
  for (const cdouble& z : f.values) acc += cldouble(z.real(), z.imag());
  acc /= static_cast<long double>(f.values.size());
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

GridFunction convolve(const GridFunction& f, const GridFunction& g) {
  require_same_spec(*f.spec, *g.spec);
  Spectrum fs = analyze(f);
  const Spectrum gs = analyze(g);
  for (std::uint64_t k = 0; k < fs.coeffs.size(); ++k)
    fs.coeffs[k] *= gs.coeffs[k];
  return synthesize(fs);
}

GridFunction translate(const GridFunction& f, std::uint64_t t) {
  if (t >= f.spec->size()) throw std::out_of_range("translation rank out of range");
  GridFunction out = zero_grid(f.spec);
  for (std::uint64_t x = 0; x < out.values.size(); ++x)
    out.values[x] = f.values[f.spec->sub(x, t)];
  return out;
}

}  // namespace vilenkin
