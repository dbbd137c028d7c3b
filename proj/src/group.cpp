#include "group.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace vilenkin {

namespace {

std::uint64_t effective_cap(std::uint64_t max_grid) {
  return max_grid == 0 ? GroupSpec::kDefaultMaxGrid : max_grid;
}

std::complex<double> unit_root(std::uint32_t t, std::uint32_t m) {
  // Reduce t/m and special-case quarter turns so that Walsh (+-1) and
  // radix-4 (+-i) twiddles are exact.
  const std::uint32_t g = std::gcd(t, m);
  const std::uint32_t num = t / g;
  const std::uint32_t den = m / g;
  if (den == 1) return {1.0, 0.0};
  if (den == 2) return {-1.0, 0.0};
  if (den == 4) return num == 1 ? std::complex<double>{0.0, 1.0}
                                : std::complex<double>{0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(num) /
                       static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

GroupSpec::GroupSpec(std::vector<std::uint32_t> radices, std::uint64_t max_grid)
    : radices_(std::move(radices)) {
  if (radices_.empty()) throw std::invalid_argument("group level must be >= 1");
  const std::uint64_t cap = effective_cap(max_grid);
  mpow_.reserve(radices_.size() + 1);
  mpow_.push_back(1);
  for (std::uint32_t m : radices_) {
    if (m < 2) throw std::invalid_argument("every radix must be >= 2");
    bound_ = std::max(bound_, m);
    const std::uint64_t prev = mpow_.back();
    if (prev > cap / m) {
      throw GridLimitError("grid size M_L exceeds the configured cap (" +
                           std::to_string(cap) + ")");
    }
    mpow_.push_back(prev * m);
  }
  roots_.resize(radices_.size());
  for (std::size_t k = 0; k < radices_.size(); ++k) {
    const std::uint32_t m = radices_[k];
    roots_[k].resize(m);
    for (std::uint32_t t = 0; t < m; ++t) {
      roots_[k][t] =
          2 * t > m ? std::conj(roots_[k][m - t]) : unit_root(t, m);
    }
  }
}

GroupPtr GroupSpec::create(const std::vector<std::uint32_t>& radices,
                           std::uint64_t max_grid) {
  return GroupPtr(new GroupSpec(radices, max_grid));
}

GroupPtr GroupSpec::create_cyclic(const std::vector<std::uint32_t>& pattern,
                                  std::size_t level, std::uint64_t max_grid) {
  if (pattern.empty()) throw std::invalid_argument("empty radix pattern");
  if (level < 1) throw std::invalid_argument("group level must be >= 1");
  std::vector<std::uint32_t> radices(level);
  for (std::size_t k = 0; k < level; ++k) radices[k] = pattern[k % pattern.size()];
  return create(radices, max_grid);
}

GroupPtr GroupSpec::parse(const std::string& text, std::uint64_t max_grid) {
  // Expected shape: m=<r0>,<r1>,...;L=<n>  (whitespace ignored)
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);

  const auto semi = s.find(';');
  if (semi == std::string::npos || s.rfind("m=", 0) != 0 ||
      s.compare(semi + 1, 2, "L=") != 0) {
    throw std::invalid_argument("bad group spec '" + text +
                                "', expected m=<r0>,<r1>,...;L=<n>");
  }
  const std::string radix_part = s.substr(2, semi - 2);
  const std::string level_part = s.substr(semi + 3);

  std::vector<std::uint32_t> pattern;
  std::stringstream rs(radix_part);
  std::string tok;
  while (std::getline(rs, tok, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad radix '" + tok + "' in group spec");
    }
    if (pos != tok.size() || v < 2 || v > 0xffffffffull)
      throw std::invalid_argument("bad radix '" + tok + "' in group spec");
    pattern.push_back(static_cast<std::uint32_t>(v));
  }
  std::size_t pos = 0;
  unsigned long level = 0;
  try {
    level = std::stoul(level_part, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad level in group spec '" + text + "'");
  }
  if (pos != level_part.size() || level < 1)
    throw std::invalid_argument("bad level in group spec '" + text + "'");
  return create_cyclic(pattern, level, max_grid);
}

std::string GroupSpec::format() const {
  std::string out = "m=";
  for (std::size_t k = 0; k < radices_.size(); ++k) {
    if (k) out.push_back(',');
    out += std::to_string(radices_[k]);
  }
  out += ";L=" + std::to_string(radices_.size());
  return out;
}

Point GroupSpec::unrank(std::uint64_t r) const {
  if (r >= size()) throw std::out_of_range("rank out of range");
  Point x;
  x.digits.resize(level());
  for (std::size_t k = 0; k < level(); ++k) {
    x.digits[k] = static_cast<std::uint32_t>(r % radices_[k]);
    r /= radices_[k];
  }
  return x;
}

std::uint64_t GroupSpec::rank(const Point& x) const {
  if (x.digits.size() != level())
    throw std::invalid_argument("point does not conform to the group spec");
  std::uint64_t r = 0;
  for (std::size_t k = 0; k < level(); ++k) {
    if (x.digits[k] >= radices_[k])
      throw std::invalid_argument("point digit out of range");
    r += static_cast<std::uint64_t>(x.digits[k]) * mpow_[k];
  }
  return r;
}

std::uint64_t GroupSpec::sub(std::uint64_t x, std::uint64_t t) const {
  std::uint64_t r = 0;
  for (std::size_t k = 0; k < level(); ++k) {
    const std::uint32_t m = radices_[k];
    const std::uint32_t xd = static_cast<std::uint32_t>(x % m);
    const std::uint32_t td = static_cast<std::uint32_t>(t % m);
    x /= m;
    t /= m;
    r += static_cast<std::uint64_t>(xd >= td ? xd - td : xd + m - td) * mpow_[k];
  }
  return r;
}

Point GroupSpec::point_sub(const Point& x, const Point& t) const {
  return unrank(sub(rank(x), rank(t)));
}

VIndex GroupSpec::index(std::uint64_t n) const {
  if (n >= size()) throw std::out_of_range("index n out of range (n < M_L)");
  VIndex v;
  v.n = n;
  v.digits = unrank(n).digits;
  v.order = 0;
  for (std::size_t k = 0; k < v.digits.size(); ++k)
    if (v.digits[k] != 0) v.order = k;
  return v;
}

std::vector<std::uint64_t> GroupSpec::coset_rep_ranks(std::size_t s) const {
  if (s > level()) throw std::out_of_range("coset level out of range");
  const std::uint64_t step = mpow_[s];
  std::vector<std::uint64_t> out;
  out.reserve(size() / step);
  for (std::uint64_t r = 0; r < size(); r += step) out.push_back(r);
  return out;
}

std::vector<Point> GroupSpec::coset_reps(std::size_t s) const {
  std::vector<Point> out;
  const auto ranks = coset_rep_ranks(s);
  out.reserve(ranks.size());
  for (std::uint64_t r : ranks) out.push_back(unrank(r));
  return out;
}

}  // namespace vilenkin
