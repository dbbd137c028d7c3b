#include <doctest.h>

#include <cmath>

#include "rng.hpp"
#include "support/oracles.hpp"
#include "verify.hpp"

using namespace vilenkin;

TEST_CASE("modulus of continuity") {
  auto w = GroupSpec::parse("m=2;L=3");
  const GridFunction r1 = character_grid(w, 2);  // r_1 = psi_{M_1}
  CHECK(modulus(r1, 1.0, 1) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(modulus(r1, 1.0, 2) == doctest::Approx(0.0));

  const GridFunction c = constant_grid(w, {3.0, -2.0});
  for (std::size_t s = 0; s <= 3; ++s) CHECK(modulus(c, 2.0, s) == 0.0);

  // indicator of I_1: the symmetric difference with any off-coset translate
  // has measure 1
  CHECK(modulus(indicator_coset(w, 1), 1.0, 0) ==
        doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(modulus(r1, 1.0, 4), std::out_of_range);
  CHECK_THROWS_AS(modulus(r1, 0.5, 1), std::domain_error);
}

TEST_CASE("modulus profile invariants") {
  for (const char* spec : {"m=2;L=5", "m=3,2,4;L=3"}) {
    auto g = GroupSpec::parse(spec);
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
      const GridFunction f = random_grid(g, seed, true);
      for (double p : {1.0, 2.0, 4.0}) {
        const ModulusProfile mp = modulus_profile(f, p);
        REQUIRE(mp.omega.size() == g->level() + 1);
        const double cap = 2.0 * lp_norm(f, p);
        for (std::size_t s = 0; s < mp.omega.size(); ++s) {
          CHECK(mp.omega[s] <= cap + 1e-12);
          if (s > 0) CHECK(mp.omega[s] <= mp.omega[s - 1] + 1e-12);
        }
        CHECK(mp.omega.back() == 0.0);
      }
    }
  }
}

TEST_CASE("Lipschitz test functions") {
  auto w4 = GroupSpec::parse("m=2;L=4");
  // alpha = 1/2, s = 2: 2 sqrt(1/4 + 1/8)
  const GridFunction f = lip_function(0.5, w4);
  const double want = 2.0 * std::sqrt(0.25 + 0.125);
  CHECK(modulus(f, 2.0, 2) == doctest::Approx(want).epsilon(1e-12));
  CHECK(want == doctest::Approx(1.2247448713915890).epsilon(1e-12));

  // closed form matches the measured omega_2 profile
  for (const char* spec : {"m=2;L=5", "m=3,2,4;L=3", "m=2,3,4,2;L=4"}) {
    auto g = GroupSpec::parse(spec);
    for (double alpha : {0.3, 0.5, 1.0, 2.0}) {
      const GridFunction lf = lip_function(alpha, g);
      for (std::size_t s = 0; s <= g->level(); ++s)
        CHECK(modulus(lf, 2.0, s) ==
              doctest::Approx(lip_modulus2_closed(alpha, *g, s))
                  .epsilon(1e-10));
    }
  }

  // the profile is within constants of M_s^-alpha
  auto w8 = GroupSpec::parse("m=2;L=8");
  for (double alpha : {0.5, 1.0}) {
    const GridFunction lf = lip_function(alpha, w8);
    for (std::size_t s = 0; s + 1 < w8->level(); ++s) {
      const double scale =
          std::pow(static_cast<double>(w8->gen_power(s)), -alpha);
      const double om = modulus(lf, 2.0, s);
      CHECK(om >= 2.0 * scale * std::pow(2.0, -alpha) - 1e-12);
      CHECK(om <= 2.0 * scale / std::sqrt(1.0 - std::pow(4.0, -alpha)) + 1e-12);
    }
  }

  // large alpha: dominated by the leading term psi_1
  const GridFunction sharp = lip_function(8.0, w4);
  CHECK(modulus(sharp, 2.0, 0) ==
        doctest::Approx(modulus(character_grid(w4, 1), 2.0, 0)).epsilon(1e-2));
  CHECK(modulus(sharp, 2.0, w4->level()) == 0.0);

  CHECK_THROWS_AS(lip_function(0.0, w4), std::invalid_argument);
}

TEST_CASE("theorem 1 bound, hand case") {
  auto w = GroupSpec::parse("m=2;L=6");
  const WeightSeq ones = WeightSeq::make("const", w->size());
  const GridFunction r1 = character_grid(w, 2);
  const ModulusProfile mp = modulus_profile(r1, 1.0);
  const double rhs = thm1_rhs(mp, ones, 4, *w);
  CHECK(rhs == doctest::Approx(576.0).epsilon(1e-12));

  GridFunction d = t_mean(r1, ones, 4);
  for (std::uint64_t x = 0; x < d.values.size(); ++x)
    d.values[x] -= r1.values[x];
  CHECK(lp_norm(d, 1.0) == doctest::Approx(0.75).epsilon(1e-12));

  CHECK_THROWS_AS(thm1_rhs(mp, WeightSeq::make("pow:1", w->size()), 4, *w),
                  std::invalid_argument);
  CHECK_THROWS_AS(thm1_rhs(mp, ones, w->size(), *w), std::out_of_range);
}

TEST_CASE("theorem 2 bound, hand case") {
  auto w = GroupSpec::parse("m=2;L=6");
  const WeightSeq lin = WeightSeq::make("pow:1", w->size());
  const GridFunction r1 = character_grid(w, 2);
  const ModulusProfile mp = modulus_profile(r1, 1.0);
  const Thm2Rhs rhs = thm2_rhs(mp, lin, 4, *w);
  CHECK(rhs.rhs == doctest::Approx(921.6).epsilon(1e-12));
  // cond0 comparison sum: (1/4)*2 + (2/4)*2 + 0 = 1.5
  CHECK(rhs.scaled_sum == doctest::Approx(1.5).epsilon(1e-12));

  GridFunction d = t_mean(r1, lin, 4);
  for (std::uint64_t x = 0; x < d.values.size(); ++x)
    d.values[x] -= r1.values[x];
  CHECK(lp_norm(d, 1.0) == doctest::Approx(0.6).epsilon(1e-12));

  CHECK_THROWS_AS(thm2_rhs(mp, WeightSeq::make("pow:-1", w->size()), 4, *w),
                  std::invalid_argument);
}

TEST_CASE("theorem 3 bound, hand case") {
  auto w = GroupSpec::parse("m=2;L=6");
  const WeightSeq lin = WeightSeq::make("pow:1", w->size());
  const GridFunction r1 = character_grid(w, 2);
  const ModulusProfile mp = modulus_profile(r1, 1.0);
  // n = 1: R^2 (1/2) 2 + (2 R^4 / q_0) q_1 (1/2) 2 + (R^2 + 2) 2
  //      = 4 + 64 + 12 = 80 with q_1 = 2
  const double rhs = thm3_rhs(mp, lin, 1, *w);
  CHECK(rhs == doctest::Approx(80.0).epsilon(1e-12));

  GridFunction d = t_mean(r1, lin, 2);  // T_{M_1}
  for (std::uint64_t x = 0; x < d.values.size(); ++x)
    d.values[x] -= r1.values[x];
  CHECK(lp_norm(d, 1.0) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(thm3_rhs(mp, lin, 0, *w), std::out_of_range);
  CHECK_THROWS_AS(thm3_rhs(mp, lin, 7, *w), std::out_of_range);
}

TEST_CASE("Fejer bound") {
  auto w = GroupSpec::parse("m=2;L=6");
  const GridFunction chi = character_grid(w, 1);
  const ModulusProfile mp = modulus_profile(chi, 2.0);
  for (std::size_t lvl = 1; lvl < w->level(); ++lvl) {
    const std::uint64_t n = w->gen_power(lvl);
    GridFunction d = fejer_mean(chi, n);
    for (std::uint64_t x = 0; x < d.values.size(); ++x)
      d.values[x] -= chi.values[x];
    const double lhs = lp_norm(d, 2.0);
    CHECK(lhs == doctest::Approx(1.0 / static_cast<double>(n)).epsilon(1e-12));
    CHECK(lhs <= fejer_rhs(mp, n, *w));
  }
}

TEST_CASE("theorem ratios stay below 1 on random data") {
  auto g = GroupSpec::parse("m=2,3,4,2;L=4");
  TheoremConfig cfg;
  cfg.spec = g;
  cfg.pvals = {1.0, 2.0, 4.0};
  cfg.functions = {"random:1", "random:2", "lip:0.5", "char:1", "char:2"};

  cfg.weights_kind = "pow:-0.5";
  const VerificationReport r1 = run_theorem_suite("1", cfg);
  CHECK(r1.all_pass());
  CHECK(r1.max_ratio() <= 1.0 + 1e-9);
  CHECK(r1.rows.size() ==
        cfg.pvals.size() * cfg.functions.size() * (g->size() - 1));

  cfg.weights_kind = "pow:1";
  const VerificationReport r2 = run_theorem_suite("2", cfg);
  CHECK(r2.all_pass());
  CHECK(r2.extras.at("scaled_pass") == 1.0);
  CHECK(r2.extras.at("scaled_sup") > 0.0);

  const VerificationReport r3 = run_theorem_suite("3", cfg);
  CHECK(r3.all_pass());
  CHECK(r3.rows.size() == cfg.pvals.size() * cfg.functions.size() * g->level());

  cfg.weights_kind = "const";
  const VerificationReport rf = run_theorem_suite("fejer", cfg);
  CHECK(rf.all_pass());

  // class mismatches are rejected before any computation
  cfg.weights_kind = "pow:-1";
  CHECK_THROWS_AS(run_theorem_suite("2", cfg), std::invalid_argument);
  cfg.weights_kind = "pow:1";
  CHECK_THROWS_AS(run_theorem_suite("1", cfg), std::invalid_argument);
  cfg.weights_kind = "const";
  CHECK_THROWS_AS(run_theorem_suite("4", cfg), std::invalid_argument);
  cfg.functions = {"char:0"};
  CHECK_THROWS_AS(run_theorem_suite("1", cfg), std::invalid_argument);
}

TEST_CASE("rate fit") {
  std::vector<std::pair<std::uint64_t, double>> series;
  for (std::uint64_t n : {2, 4, 8, 16, 32})
    series.emplace_back(n, 3.0 * std::pow(static_cast<double>(n), -0.5));
  const RateFit fit = rate_fit(series);
  CHECK(fit.slope == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(fit.r2 == doctest::Approx(1.0).epsilon(1e-12));

  std::vector<std::pair<std::uint64_t, double>> flat;
  for (std::uint64_t n : {2, 4, 8}) flat.emplace_back(n, 0.7);
  CHECK(rate_fit(flat).slope == doctest::Approx(0.0));

  CHECK_THROWS_AS(rate_fit({{1, 1.0}, {2, 0.5}}), std::invalid_argument);
  CHECK_THROWS_AS(rate_fit({{1, 1.0}, {2, 0.0}, {3, 1.0}}),
                  std::invalid_argument);
}

TEST_CASE("negative-result probe") {
  auto w = GroupSpec::parse("m=2;L=8");
  for (std::size_t lvl = 1; lvl <= w->level(); ++lvl)
    for (double p : {1.0, 2.0, 4.0})
      CHECK(std::abs(negative_probe(w, lvl, p) - 1.0) <= 1e-10);
}

TEST_CASE("rate suite on a small Walsh grid") {
  RateConfig cfg;
  cfg.level = 10;
  cfg.alpha = 0.5;
  cfg.p = 2.0;
  cfg.tol = 0.2;
  const RateReport report = run_rate_suite(cfg);
  CHECK(report.errors.size() == 10);
  CHECK(report.target == doctest::Approx(-0.5));
  CHECK(report.pass);
  CHECK(std::abs(report.slope - (-0.5)) <= 0.2);

  CHECK_THROWS_AS(default_rate_target(0.5, "pow:-1"), std::invalid_argument);
  CHECK_THROWS_AS(default_rate_target(0.5, "custom:1,2"),
                  std::invalid_argument);
  CHECK(default_rate_target(0.5, "pow:-0.25") == doctest::Approx(-0.5));
  CHECK(default_rate_target(0.8, "pow:-0.25") == doctest::Approx(-0.75));
  CHECK(default_rate_target(2.0, "const") == doctest::Approx(-1.0));
}
