#pragma once

#include "grid.hpp"

namespace vilenkin {

/// Character value psi_n(x) = prod_k exp(2 pi i n_k x_k / m_k) for ranks n, x.
cdouble psi(const GroupSpec& g, std::uint64_t n, std::uint64_t x);

/// psi_n materialized on the grid.
GridFunction character_grid(GroupPtr spec, std::uint64_t n);

/// Forward transform: coeffs[k] = (1/M_L) sum_x f(x) conj(psi_k(x)).
/// Separable mixed-radix evaluation, one DFT of size m_k per digit axis.
Spectrum analyze(const GridFunction& f);

/// Inverse transform: f(x) = sum_k coeffs[k] psi_k(x). No normalization, so
/// synthesize(analyze(f)) == f.
GridFunction synthesize(const Spectrum& s);

/// S_n f, truncated synthesis over k < n. S_0 f = 0, S_{M_L} f = f.
GridFunction partial_sum(const GridFunction& f, std::uint64_t n);
GridFunction partial_sum(const Spectrum& fhat, std::uint64_t n);

/// ((1/M_L) sum_x |f(x)|^p)^(1/p). p must lie in [1, 64].
double lp_norm(const GridFunction& f, double p);

/// (1/M_L) sum_x f(x); exact for step functions constant on I_L cosets.
cdouble haar_integral(const GridFunction& f);

/// (f*g)(x) = integral of f(x-t) g(t) dmu(t), via coefficient-wise product
/// of the two spectra.
GridFunction convolve(const GridFunction& f, const GridFunction& g);

/// x -> f(x - t) for a rank t.
GridFunction translate(const GridFunction& f, std::uint64_t t);

}  // namespace vilenkin
