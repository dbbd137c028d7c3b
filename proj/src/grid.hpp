#pragma once

#include <complex>
#include <string>
#include <vector>

#include "group.hpp"

namespace vilenkin {

using cdouble = std::complex<double>;

/// Complex step function constant on cosets of I_L: M_L values by rank.
struct GridFunction {
  GroupPtr spec;
  std::vector<cdouble> values;
};

/// Vilenkin-Fourier coefficients f_hat(0..M_L-1).
struct Spectrum {
  GroupPtr spec;
  std::vector<cdouble> coeffs;
};

GridFunction zero_grid(GroupPtr spec);
GridFunction constant_grid(GroupPtr spec, cdouble c);

/// Indicator of the coset I_s(base). Measure 1/M_s.
GridFunction indicator_coset(GroupPtr spec, std::size_t s,
                             std::uint64_t base_rank = 0);

void require_same_spec(const GroupSpec& a, const GroupSpec& b);
void require_finite(const std::vector<cdouble>& v);

// JSON document for both kinds, values ordered by rank:
//   { "spec": "m=...;L=...", "kind": "grid"|"spectrum",
//     "re": [...], "im": [...] }
std::string to_json(const GridFunction& f);
std::string to_json(const Spectrum& s);

enum class DocKind { grid, spectrum };
DocKind json_doc_kind(const std::string& text);
GridFunction grid_from_json(const std::string& text, std::uint64_t max_grid = 0);
Spectrum spectrum_from_json(const std::string& text, std::uint64_t max_grid = 0);

}  // namespace vilenkin
