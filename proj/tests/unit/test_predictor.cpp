#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lcycle/analytic.hpp"
#include "lcycle/predictor.hpp"

using namespace lcycle;

TEST_CASE("regime classification") {
  Regime crit = regime_of(1'000'000, 500'000);
  CHECK(crit.tag == RegimeTag::Critical);
  CHECK(crit.mu == 0.0);
  REQUIRE(crit.alpha);
  CHECK(*crit.alpha == 1.0);

  Regime sub = regime_of(8000, 2000);
  CHECK(sub.tag == RegimeTag::Subcritical);
  CHECK(sub.c == 0.25);
  CHECK_FALSE(sub.alpha);

  Regime barely = regime_of(1'000'000, 495'000, {0.5, 0.45});
  CHECK(barely.tag == RegimeTag::BarelySubcritical);
  CHECK(barely.mu == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(regime_of(1'000'000, 495'000).tag == RegimeTag::Critical);

  CHECK(to_string(RegimeTag::BarelySubcritical) == "barely_subcritical");
}

TEST_CASE("regime errors") {
  CHECK_THROWS_AS(regime_of(100, 90), UnsupportedRegime);
  CHECK_THROWS_AS(regime_of(2, 1), std::domain_error);
  CHECK_THROWS_AS(regime_of(10, 46), std::domain_error);
  CHECK_THROWS_AS(regime_of(10, -1), std::domain_error);
  CHECK_THROWS_AS(regime_of(10, 3, {0.0, 0.45}), std::domain_error);
}

TEST_CASE("predictions") {
  Prediction p = predict(8000, 2000, LengthSet::finite({3, 4, 5}));
  CHECK(p.zstar == 0.5);
  CHECK(p.lambda == doctest::Approx(61.0 / 1920).epsilon(1e-14));
  CHECK(p.gaussian.mean == p.lambda);
  CHECK(p.gaussian.sd * p.gaussian.sd == doctest::Approx(p.lambda));
  CHECK(p.p_no_cycle() == doctest::Approx(0.968728556937905).epsilon(1e-13));
  CHECK(prob_no_Lcycle(8000, 2000, LengthSet::finite({3, 4, 5})) == doctest::Approx(0.968728556937905));

  Prediction c = predict(100'000, 50'000, LengthSet::all_at_least());
  CHECK(c.regime.tag == RegimeTag::Critical);
  CHECK(c.zstar == doctest::Approx(0.978686074812965).epsilon(1e-13));
  CHECK(c.lambda == doctest::Approx(1.19539768194943).epsilon(1e-11));
  CHECK(std::abs(c.lambda - 1.1952) <= 3e-4);
  CHECK(c.p_no_cycle() == doctest::Approx(0.302583598216826).epsilon(1e-11));

  Prediction none = predict(5000, 1000, LengthSet::finite({}));
  CHECK(none.lambda == 0.0);
  CHECK(none.poisson_pmf(0) == 1.0);
  CHECK(none.poisson_pmf(1) == 0.0);
  CHECK(none.p_no_cycle() == 1.0);

  Prediction empty_graph = predict(50, 0, LengthSet::all_at_least());
  CHECK(empty_graph.zstar == 0.0);
  CHECK(empty_graph.lambda == 0.0);
}

TEST_CASE("Poisson pmf of the prediction") {
  Prediction p = predict(8000, 2000, LengthSet::all_at_least());
  double total = 0;
  for (int k = 0; k < 30; ++k) total += p.poisson_pmf(k);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(p.poisson_pmf(2) == doctest::Approx(std::exp(-p.lambda) * p.lambda * p.lambda / 2).epsilon(1e-13));
}

TEST_CASE("critical saddle point approaches the barely subcritical one for large |mu|") {
  // With 2M/n = 1 + με, the critical z* = e^{-αε} differs from 1 + με by
  // (α + μ)ε + O(ε²), and α + μ = 1/α → 0 as μ → -∞.
  for (double n : {1e3, 1e6, 1e9}) {
    const double eps = std::pow(n, -1.0 / 3.0);
    for (double mu : {-1.0, -0.5, -0.1}) {
      const double alpha = solve_alpha(mu);
      const double gap = std::exp(-alpha * eps) - (1 + mu * eps);
      CHECK(std::abs(gap + (alpha + mu) * eps) <= alpha * alpha * eps * eps);
    }
  }
  const double eps = 1e-7;
  double prev = INFINITY;
  for (double mu : {-5.0, -10.0, -20.0, -40.0}) {
    const double alpha = solve_alpha(mu);
    const double rel = std::abs(std::expm1(-alpha * eps) - mu * eps) / eps;
    CHECK(rel <= 1.1 / std::abs(mu) + alpha * alpha * eps);
    CHECK(rel < prev);
    prev = rel;
  }
}

TEST_CASE("lambda is nondecreasing in M within a regime") {
  const std::int64_t n = 1'000'000;
  auto L = LengthSet::parse("odd");
  double prev = -1;
  RegimeTag prev_tag = RegimeTag::Subcritical;
  for (std::int64_t m = 1000; m <= 505'000; m += 1000) {
    Prediction p = predict(n, m, L);
    if (p.regime.tag == prev_tag) CHECK(p.lambda >= prev);
    prev = p.lambda;
    prev_tag = p.regime.tag;
  }
}

TEST_CASE("all lengths dominate any L") {
  for (std::int64_t m : {2000, 4000, 4950, 5000}) {
    const double all = predict(10'000, m, LengthSet::all_at_least()).lambda;
    for (const char* spec : {"3", "even", "not:3", "ge:7", "mod:2:5"}) {
      CHECK(predict(10'000, m, LengthSet::parse(spec)).lambda <= all + 1e-12);
    }
  }
}
