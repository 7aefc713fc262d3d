#include "lcycle/predictor.hpp"

#include <cmath>

#include "lcycle/analytic.hpp"

namespace lcycle {

std::string to_string(RegimeTag tag) {
  switch (tag) {
    case RegimeTag::Subcritical:
      return "subcritical";
    case RegimeTag::BarelySubcritical:
      return "barely_subcritical";
    case RegimeTag::Critical:
      return "critical";
  }
  return "unknown";
}

Regime regime_of(std::int64_t n, std::int64_t m, const RegimeThresholds& thresholds) {
  if (n < 3) throw std::domain_error("regime_of needs n >= 3");
  if (m < 0 || m > n * (n - 1) / 2) throw std::domain_error("regime_of needs 0 <= M <= n(n-1)/2");
  if (!(thresholds.mu_crit > 0)) throw std::domain_error("mu_crit must be positive");

  const auto nd = static_cast<double>(n);
  Regime reg;
  reg.c = static_cast<double>(m) / nd;
  const double root = std::cbrt(nd);
  reg.mu = static_cast<double>(2 * m - n) / (root * root);
  if (std::abs(reg.mu) <= thresholds.mu_crit) {
    reg.tag = RegimeTag::Critical;
    reg.alpha = solve_alpha(reg.mu);
  } else if (reg.mu < 0) {
    reg.tag = reg.c > thresholds.subcrit_cut ? RegimeTag::BarelySubcritical : RegimeTag::Subcritical;
  } else {
    throw UnsupportedRegime("supercritical input (mu = " + std::to_string(reg.mu) +
                            " > mu_crit): no limit law is available above the critical window");
  }
  return reg;
}

double Prediction::poisson_pmf(std::int64_t k) const { return lcycle::poisson_pmf(lambda, k); }

double Prediction::p_no_cycle() const { return std::exp(-lambda); }

Prediction predict(std::int64_t n, std::int64_t m, const LengthSet& L, const RegimeThresholds& thresholds) {
  Prediction p;
  p.regime = regime_of(n, m, thresholds);
  if (p.regime.tag == RegimeTag::Critical) {
    p.zstar = std::exp(-*p.regime.alpha / std::cbrt(static_cast<double>(n)));
  } else {
    p.zstar = 2.0 * p.regime.c;
  }
  p.lambda = lambda_L(L, p.zstar, 1e-12);
  p.gaussian = {p.lambda, std::sqrt(p.lambda)};
  return p;
}

double prob_no_Lcycle(std::int64_t n, std::int64_t m, const LengthSet& L, const RegimeThresholds& thresholds) {
  return predict(n, m, L, thresholds).p_no_cycle();
}

}  // namespace lcycle
