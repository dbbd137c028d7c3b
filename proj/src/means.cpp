#include "means.hpp"

#include <cmath>
#include <sstream>

namespace vilenkin {

namespace {

// Kahan-compensated running sum.
class Kahan {
 public:
  void add(double x) {
    const double y = x - comp_;
    const double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

std::vector<double> parse_custom(const std::string& body) {
  std::vector<double> vals;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    double v = 0;
    try {
      v = std::stod(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad custom weight '" + tok + "'");
    }
    if (pos != tok.size())
      throw std::invalid_argument("bad custom weight '" + tok + "'");
    vals.push_back(v);
  }
  if (vals.empty()) throw std::invalid_argument("empty custom weight list");
  return vals;
}

}  // namespace

WeightSeq::WeightSeq(std::vector<double> q, std::string label)
    : q_(std::move(q)), label_(std::move(label)) {
  if (q_.empty()) throw std::invalid_argument("weight sequence must be nonempty");
  if (!(q_[0] > 0.0)) throw std::invalid_argument("q_0 must be positive");
  non_increasing_ = non_decreasing_ = true;
  for (std::size_t k = 0; k < q_.size(); ++k) {
    if (!(q_[k] >= 0.0) || !std::isfinite(q_[k]))
      throw std::invalid_argument("weights must be finite and non-negative");
    if (k > 0) {
      if (q_[k] > q_[k - 1]) non_increasing_ = false;
      if (q_[k] < q_[k - 1]) non_decreasing_ = false;
    }
  }
  // A constant sequence is tagged non_decreasing by convention.
  cls_ = non_decreasing_   ? WeightClass::non_decreasing
         : non_increasing_ ? WeightClass::non_increasing
                           : WeightClass::other;

  partials_.resize(q_.size() + 1);
  Kahan acc;
  partials_[0] = 0.0;
  for (std::size_t k = 0; k < q_.size(); ++k) {
    acc.add(q_[k]);
    partials_[k + 1] = acc.value();
  }
  regular_ = partials_.back() > partials_[q_.size() / 2];
  cond2_sup_ = 0.0;
  for (std::uint64_t n = 2; n <= q_.size(); ++n)
    cond2_sup_ = std::max(cond2_sup_,
                          static_cast<double>(n) * q_[n - 1] / partials_[n]);
}

WeightSeq WeightSeq::from_values(std::vector<double> q, std::string label) {
  return WeightSeq(std::move(q), std::move(label));
}

WeightSeq WeightSeq::make(const std::string& kind, std::uint64_t nmax) {
  if (nmax < 1) throw std::invalid_argument("nmax must be >= 1");
  if (kind == "const") {
    return WeightSeq(std::vector<double>(nmax, 1.0), kind);
  }
  if (kind.rfind("pow:", 0) == 0) {
    const double gamma = std::stod(kind.substr(4));
    std::vector<double> q(nmax);
    for (std::uint64_t k = 0; k < nmax; ++k)
      q[k] = std::pow(static_cast<double>(k + 1), gamma);
    return WeightSeq(std::move(q), kind);
  }
  if (kind.rfind("logpow:", 0) == 0) {
    const double beta = std::stod(kind.substr(7));
    if (!(beta > 0.0))
      throw std::invalid_argument("logpow requires beta > 0");
    std::vector<double> q(nmax);
    for (std::uint64_t k = 0; k < nmax; ++k)
      q[k] = std::pow(std::log(static_cast<double>(k + 2)), -beta);
    return WeightSeq(std::move(q), kind);
  }
  if (kind.rfind("custom:", 0) == 0) {
    const std::vector<double> pattern = parse_custom(kind.substr(7));
    std::vector<double> q(nmax);
    for (std::uint64_t k = 0; k < nmax; ++k) q[k] = pattern[k % pattern.size()];
    return WeightSeq(std::move(q), kind);
  }
  throw std::invalid_argument("unknown weight kind '" + kind + "'");
}

namespace {

// Applies a Fourier multiplier and synthesizes: sum_j lambda(j) c_j psi_j.
GridFunction apply_multiplier(const Spectrum& fhat,
                              const std::vector<double>& lambda) {
  Spectrum s;
  s.spec = fhat.spec;
  s.coeffs.resize(fhat.coeffs.size());
  for (std::size_t j = 0; j < s.coeffs.size(); ++j)
    s.coeffs[j] = fhat.coeffs[j] * lambda[j];
  return synthesize(s);
}

void check_mean_order(const GroupSpec& g, std::uint64_t n) {
  if (n < 1 || n > g.size())
    throw std::out_of_range("mean order n out of range (1 <= n <= M_L)");
}

}  // namespace

GridFunction fejer_mean(const Spectrum& fhat, std::uint64_t n) {
  check_mean_order(*fhat.spec, n);
  // sigma_n picks up f_hat(j) from S_k for k >= j+1, so (n-j)/n of the mass.
  std::vector<double> lambda(fhat.spec->size(), 0.0);
  const double nn = static_cast<double>(n);
  for (std::uint64_t j = 0; j < n; ++j)
    lambda[j] = static_cast<double>(n - j) / nn;
  return apply_multiplier(fhat, lambda);
}

GridFunction fejer_mean(const GridFunction& f, std::uint64_t n) {
  return fejer_mean(analyze(f), n);
}

GridFunction t_mean(const Spectrum& fhat, const WeightSeq& q, std::uint64_t n) {
  check_mean_order(*fhat.spec, n);
  if (q.nmax() < n) throw std::invalid_argument("weights shorter than n");
  const double Qn = q.partial(n);
  if (!(Qn > 0.0)) throw std::invalid_argument("Q_n must be positive");
  // coefficient j appears in S_k for k >= j+1: weight (Q_n - Q_{j+1}) / Q_n
  std::vector<double> lambda(fhat.spec->size(), 0.0);
  for (std::uint64_t j = 0; j + 1 < n; ++j)
    lambda[j] = (Qn - q.partial(j + 1)) / Qn;
  return apply_multiplier(fhat, lambda);
}

GridFunction t_mean(const GridFunction& f, const WeightSeq& q, std::uint64_t n) {
  return t_mean(analyze(f), q, n);
}

GridFunction norlund_mean(const Spectrum& fhat, const WeightSeq& q,
                          std::uint64_t n) {
  check_mean_order(*fhat.spec, n);
  if (q.nmax() < n) throw std::invalid_argument("weights shorter than n");
  const double Qn = q.partial(n);
  if (!(Qn > 0.0)) throw std::invalid_argument("Q_n must be positive");
  // coefficient j collects q_{n-k} over k = j+1..n, i.e. Q_{n-j} / Q_n
  std::vector<double> lambda(fhat.spec->size(), 0.0);
  for (std::uint64_t j = 0; j < n; ++j) lambda[j] = q.partial(n - j) / Qn;
  return apply_multiplier(fhat, lambda);
}

GridFunction norlund_mean(const GridFunction& f, const WeightSeq& q,
                          std::uint64_t n) {
  return norlund_mean(analyze(f), q, n);
}

GridFunction t_mean_abel(const GridFunction& f, const WeightSeq& q,
                         std::uint64_t n) {
  check_mean_order(*f.spec, n);
  if (n < 2) throw std::out_of_range("Abel form needs n >= 2");
  if (q.nmax() < n) throw std::invalid_argument("weights shorter than n");
  const double Qn = q.partial(n);
  if (!(Qn > 0.0)) throw std::invalid_argument("Q_n must be positive");

  const Spectrum fhat = analyze(f);
  const std::uint64_t size = f.spec->size();
  std::vector<cdouble> S(size, cdouble{0.0, 0.0});     // S_k f
  std::vector<cdouble> cumS(size, cdouble{0.0, 0.0});  // k sigma_k f
  std::vector<cdouble> acc(size, cdouble{0.0, 0.0});
  for (std::uint64_t k = 1; k < n; ++k) {
    const cdouble c = fhat.coeffs[k - 1];
    for (std::uint64_t x = 0; x < size; ++x) {
      S[x] += c * psi(*f.spec, k - 1, x);
      cumS[x] += S[x];
    }
    const double w = (k <= n - 2) ? q.q(k) - q.q(k + 1) : q.q(n - 1);
    if (w != 0.0)
      for (std::uint64_t x = 0; x < size; ++x) acc[x] += w * cumS[x];
  }
  GridFunction out = zero_grid(f.spec);
  for (std::uint64_t x = 0; x < size; ++x) out.values[x] = acc[x] / Qn;
  return out;
}

double abel_weight_residual(const WeightSeq& q, std::uint64_t n) {
  if (n < 2 || n > q.nmax()) throw std::out_of_range("n out of range");
  Kahan acc;
  for (std::uint64_t k = 0; k + 2 <= n; ++k)
    acc.add((q.q(k) - q.q(k + 1)) * static_cast<double>(k));
  acc.add(q.q(n - 1) * static_cast<double>(n - 1));
  return std::abs(acc.value() - (q.partial(n) - q.q(0)));
}

}  // namespace vilenkin
