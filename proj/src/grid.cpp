#include "grid.hpp"

#include <cmath>

#include <json.hpp>

namespace vilenkin {

GridFunction zero_grid(GroupPtr spec) {
  GridFunction f;
  f.values.assign(spec->size(), cdouble{0.0, 0.0});
  f.spec = std::move(spec);
  return f;
}

GridFunction constant_grid(GroupPtr spec, cdouble c) {
  GridFunction f;
  f.values.assign(spec->size(), c);
  f.spec = std::move(spec);
  return f;
}

GridFunction indicator_coset(GroupPtr spec, std::size_t s,
                             std::uint64_t base_rank) {
  if (base_rank >= spec->size()) throw std::out_of_range("base rank out of range");
  GridFunction f = zero_grid(spec);
  const std::uint64_t step = spec->gen_power(s);
  const std::uint64_t lo = base_rank % step;
  for (std::uint64_t r = lo; r < spec->size(); r += step) f.values[r] = 1.0;
  return f;
}

void require_same_spec(const GroupSpec& a, const GroupSpec& b) {
  if (!a.same_as(b))
    throw std::invalid_argument("operands live on different group specs");
}

void require_finite(const std::vector<cdouble>& v) {
  for (const cdouble& z : v)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw std::invalid_argument("values must be finite (no NaN/Inf)");
}

namespace {

nlohmann::json doc_json(const GroupSpec& spec, const char* kind,
                        const std::vector<cdouble>& v) {
  nlohmann::json j;
  j["spec"] = spec.format();
  j["kind"] = kind;
  auto& re = j["re"] = nlohmann::json::array();
  auto& im = j["im"] = nlohmann::json::array();
  for (const cdouble& z : v) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  return j;
}

std::vector<cdouble> parse_doc(const std::string& text, const char* want_kind,
                               std::uint64_t max_grid, GroupPtr& spec_out) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad JSON document: ") + e.what());
  }
  if (!j.is_object() || !j.contains("spec") || !j.contains("kind") ||
      !j.contains("re") || !j.contains("im"))
    throw std::invalid_argument("JSON document missing spec/kind/re/im");
  if (j["kind"] != want_kind)
    throw std::invalid_argument(std::string("expected kind '") + want_kind +
                                "', got '" + j["kind"].get<std::string>() + "'");
  spec_out = GroupSpec::parse(j["spec"].get<std::string>(), max_grid);
  const auto& re = j["re"];
  const auto& im = j["im"];
  if (!re.is_array() || !im.is_array() || re.size() != spec_out->size() ||
      im.size() != spec_out->size())
    throw std::invalid_argument("re/im arrays must have length M_L");
  std::vector<cdouble> v(spec_out->size());
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = {re[i].get<double>(), im[i].get<double>()};
  require_finite(v);
  return v;
}

}  // namespace

std::string to_json(const GridFunction& f) {
  return doc_json(*f.spec, "grid", f.values).dump();
}

std::string to_json(const Spectrum& s) {
  return doc_json(*s.spec, "spectrum", s.coeffs).dump();
}

DocKind json_doc_kind(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad JSON document: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("JSON document missing 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "grid") return DocKind::grid;
  if (kind == "spectrum") return DocKind::spectrum;
  throw std::invalid_argument("unknown document kind '" + kind + "'");
}

GridFunction grid_from_json(const std::string& text, std::uint64_t max_grid) {
  GridFunction f;
  f.values = parse_doc(text, "grid", max_grid, f.spec);
  return f;
}

Spectrum spectrum_from_json(const std::string& text, std::uint64_t max_grid) {
  Spectrum s;
  s.coeffs = parse_doc(text, "spectrum", max_grid, s.spec);
  return s;
}

}  // namespace vilenkin
