#include <doctest.h>

#include <cmath>

#include "kernels.hpp"
#include "rng.hpp"
#include "support/oracles.hpp"

using namespace vilenkin;

TEST_CASE("weight construction") {
  const WeightSeq lin = WeightSeq::make("pow:1", 5);
  CHECK(lin.q(0) == 1.0);
  CHECK(lin.q(4) == 5.0);
  CHECK(lin.partial(4) == doctest::Approx(10.0));
  CHECK(lin.cls() == WeightClass::non_decreasing);
  // n q_{n-1} / Q_n = 2n/(n+1) <= 2
  CHECK(lin.cond2_sup() <= 2.0 + 1e-12);
  CHECK(lin.cond2_sup() == doctest::Approx(2.0 * 5.0 / 6.0).epsilon(1e-12));

  const WeightSeq ones = WeightSeq::make("const", 6);
  CHECK(ones.cls() == WeightClass::non_decreasing);  // tag convention
  CHECK(ones.non_increasing());
  CHECK(ones.non_decreasing());
  CHECK(ones.regular_proxy());

  const WeightSeq dec = WeightSeq::make("pow:-0.5", 4);
  CHECK(dec.cls() == WeightClass::non_increasing);
  CHECK(dec.q(1) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(dec.q(3) == doctest::Approx(0.5));

  const WeightSeq lp = WeightSeq::make("logpow:1", 16);
  CHECK(lp.cls() == WeightClass::non_increasing);
  CHECK(lp.q(0) == doctest::Approx(1.0 / std::log(2.0)));

  const WeightSeq mix = WeightSeq::from_values({2, 1, 3});
  CHECK(mix.cls() == WeightClass::other);

  CHECK_THROWS_AS(WeightSeq::make("logpow:0", 4), std::invalid_argument);
  CHECK_THROWS_AS(WeightSeq::make("logpow:-1", 4), std::invalid_argument);
  CHECK_THROWS_AS(WeightSeq::make("custom:", 4), std::invalid_argument);
  CHECK_THROWS_AS(WeightSeq::make("nope", 4), std::invalid_argument);
  CHECK_THROWS_AS(WeightSeq::from_values({0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(WeightSeq::from_values({1.0, -0.5}), std::invalid_argument);
}

TEST_CASE("partials increase for regular kinds") {
  for (const char* kind : {"const", "pow:-1", "pow:-0.5", "pow:0.5", "logpow:1"}) {
    const WeightSeq w = WeightSeq::make(kind, 64);
    for (std::uint64_t n = 0; n < 64; ++n)
      CHECK(w.partial(n + 1) > w.partial(n));
  }
}

TEST_CASE("Fejer mean") {
  auto g = GroupSpec::parse("m=2;L=3");
  // sigma_8(psi_3) = (5/8) psi_3
  GridFunction want = character_grid(g, 3);
  for (cdouble& v : want.values) v *= 5.0 / 8.0;
  CHECK(oracle::max_abs_diff(fejer_mean(character_grid(g, 3), 8), want) <
        1e-13);

  // constants reproduce
  const GridFunction c = constant_grid(g, {2.0, -1.0});
  for (std::uint64_t n = 1; n <= 8; ++n)
    CHECK(oracle::max_abs_diff(fejer_mean(c, n), c) < 1e-13);

  // sigma_{M_n} psi_1 = ((M_n-1)/M_n) psi_1, so M_n || sigma psi_1 - psi_1 || = 1
  auto w12 = GroupSpec::parse("m=2;L=6");
  const GridFunction chi = character_grid(w12, 1);
  for (std::size_t lvl = 1; lvl <= w12->level(); ++lvl) {
    const std::uint64_t Mn = w12->gen_power(lvl);
    GridFunction d = fejer_mean(chi, Mn);
    for (std::uint64_t x = 0; x < d.values.size(); ++x)
      d.values[x] -= chi.values[x];
    for (double p : {1.0, 2.0, 4.0})
      CHECK(std::abs(static_cast<double>(Mn) * lp_norm(d, p) - 1.0) < 1e-10);
  }

  // against the definitional oracle
  auto h = GroupSpec::parse("m=3,2,4;L=3");
  const GridFunction f = random_grid(h, 4, true);
  for (std::uint64_t n = 1; n <= h->size(); n += 5)
    CHECK(oracle::max_abs_diff(fejer_mean(f, n), oracle::fejer_mean(f, n)) <
          1e-11);
}

TEST_CASE("T mean") {
  auto g = GroupSpec::parse("m=2;L=3");
  const WeightSeq ones = WeightSeq::make("const", 8);

  // q = 1: T_n = ((n-1)/n) sigma_{n-1}
  const GridFunction psi0 = character_grid(g, 0);
  CHECK(oracle::max_abs_diff(t_mean(psi0, ones, 4),
                             constant_grid(g, 0.75)) < 1e-13);

  const WeightSeq steps = WeightSeq::from_values({1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(oracle::max_abs_diff(t_mean(psi0, steps, 4),
                             constant_grid(g, 0.9)) < 1e-13);

  // T_4 r_1 = (1/4) psi_2 on Walsh, so the L1 error is 3/4
  const GridFunction r1 = character_grid(g, 2);
  GridFunction d = t_mean(r1, ones, 4);
  for (std::uint64_t x = 0; x < 8; ++x) d.values[x] -= r1.values[x];
  CHECK(lp_norm(d, 1.0) == doctest::Approx(0.75).epsilon(1e-12));

  // character eigenvector property: T_n psi_j = (sum_{k=j+1}^{n-1} q_k / Q_n) psi_j
  auto h = GroupSpec::parse("m=3,2;L=2");
  const WeightSeq pw = WeightSeq::make("pow:0.5", h->size());
  for (std::uint64_t j = 0; j + 1 < 5; ++j) {
    const std::uint64_t n = 5;
    double lam = 0.0;
    for (std::uint64_t k = j + 1; k <= n - 1; ++k) lam += pw.q(k);
    lam /= pw.partial(n);
    GridFunction want = character_grid(h, j);
    for (cdouble& v : want.values) v *= lam;
    CHECK(oracle::max_abs_diff(t_mean(character_grid(h, j), pw, n), want) <
          1e-13);
  }

  // constants: T_n c = c (Q_n - q_0)/Q_n
  const GridFunction c = constant_grid(h, {1.0, 1.0});
  for (std::uint64_t n = 1; n <= h->size(); ++n) {
    const double fac = (pw.partial(n) - pw.q(0)) / pw.partial(n);
    CHECK(oracle::max_abs_diff(t_mean(c, pw, n),
                               constant_grid(h, cdouble{fac, fac})) < 1e-12);
  }

  // oracle agreement on random input
  const GridFunction f = random_grid(h, 21, true);
  for (std::uint64_t n = 1; n <= h->size(); ++n)
    CHECK(oracle::max_abs_diff(t_mean(f, pw, n), oracle::t_mean(f, pw, n)) <
          1e-11);

  CHECK_THROWS_AS(t_mean(f, WeightSeq::make("const", 2), 5),
                  std::invalid_argument);
}

TEST_CASE("Norlund mean") {
  auto g = GroupSpec::parse("m=3,2;L=2");
  const WeightSeq pw = WeightSeq::make("pow:-0.5", g->size());

  // t_n psi_0 = psi_0
  const GridFunction psi0 = character_grid(g, 0);
  for (std::uint64_t n = 1; n <= g->size(); ++n)
    CHECK(oracle::max_abs_diff(norlund_mean(psi0, pw, n), psi0) < 1e-12);

  // q = 1: t_n = sigma_n
  const WeightSeq ones = WeightSeq::make("const", g->size());
  const GridFunction f = random_grid(g, 9, true);
  for (std::uint64_t n = 1; n <= g->size(); ++n)
    CHECK(oracle::max_abs_diff(norlund_mean(f, ones, n), fejer_mean(f, n)) <
          1e-12);

  // t_1 f = S_1 f = f_hat(0)
  const Spectrum fs = analyze(f);
  CHECK(oracle::max_abs_diff(norlund_mean(f, pw, 1),
                             constant_grid(g, fs.coeffs[0])) < 1e-13);

  for (std::uint64_t n = 1; n <= g->size(); ++n)
    CHECK(oracle::max_abs_diff(norlund_mean(f, pw, n),
                               oracle::norlund_mean(f, pw, n)) < 1e-11);
}

TEST_CASE("mean-kernel duality") {
  auto g = GroupSpec::parse("m=2,3,4;L=3");
  const GridFunction f = random_grid(g, 33, true);
  const WeightSeq pw = WeightSeq::make("pow:0.25", g->size());
  for (std::uint64_t n = 1; n <= g->size(); n += 3) {
    CHECK(oracle::max_abs_diff(t_mean(f, pw, n),
                               convolve(f, t_kernel(g, pw, n))) < 1e-10);
    CHECK(oracle::max_abs_diff(fejer_mean(f, n),
                               convolve(f, fejer_kernel(g, n))) < 1e-10);
  }
}

TEST_CASE("Abel form of the T mean") {
  auto g = GroupSpec::parse("m=2;L=4");
  const GridFunction f = random_grid(g, 55, true);

  // q = 1 collapses to ((n-1)/n) sigma_{n-1}
  const WeightSeq ones = WeightSeq::make("const", g->size());
  for (std::uint64_t n = 2; n <= g->size(); ++n) {
    GridFunction want = fejer_mean(f, n - 1);
    const double fac = static_cast<double>(n - 1) / static_cast<double>(n);
    for (cdouble& v : want.values) v *= fac;
    CHECK(oracle::max_abs_diff(t_mean_abel(f, ones, n), want) < 1e-11);
  }

  for (const char* kind : {"const", "pow:-0.5", "pow:0.5", "pow:1", "logpow:1"}) {
    const WeightSeq w = WeightSeq::make(kind, g->size());
    for (std::uint64_t n = 2; n <= g->size(); ++n)
      CHECK(oracle::max_abs_diff(t_mean_abel(f, w, n), t_mean(f, w, n)) <
            1e-10);
  }

  CHECK_THROWS_AS(t_mean_abel(f, ones, 1), std::out_of_range);
}

TEST_CASE("scalar Abel identity") {
  // the printed transform telescopes to Q_n - q_0
  for (const char* kind : {"const", "pow:-0.5", "pow:0.5", "pow:1", "logpow:1"}) {
    const WeightSeq w = WeightSeq::make(kind, 64);
    for (std::uint64_t n = 2; n <= 64; ++n)
      CHECK(abel_weight_residual(w, n) <= 1e-10);
  }
  const WeightSeq hand = WeightSeq::make("pow:-0.5", 16);
  double printed = 0.0;
  for (std::uint64_t k = 0; k + 2 <= 16; ++k)
    printed += (hand.q(k) - hand.q(k + 1)) * static_cast<double>(k);
  printed += hand.q(15) * 15.0;
  CHECK(printed == doctest::Approx(hand.partial(16) - 1.0).epsilon(1e-12));
}
