#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "lcycle/length_set.hpp"

namespace lcycle {

enum class RegimeTag { Subcritical, BarelySubcritical, Critical };

std::string to_string(RegimeTag tag);

/// Finite-n cut points between the asymptotic regimes.
struct RegimeThresholds {
  double mu_crit = 1.0;      // |μ| <= mu_crit is the critical window
  double subcrit_cut = 0.45;  // below the window, M/n above this is "barely" subcritical
};

struct Regime {
  RegimeTag tag = RegimeTag::Subcritical;
  double c = 0;    // M/n
  double mu = 0;   // (2M/n - 1) n^{1/3}
  std::optional<double> alpha;  // critical only
};

/// Raised for M above the critical window; no limit law is available there.
class UnsupportedRegime : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

Regime regime_of(std::int64_t n, std::int64_t m, const RegimeThresholds& thresholds = {});

struct GaussianLimit {
  double mean = 0;
  double sd = 0;
};

/// Limit-law prediction for X_{n,M}^{(L)}: Poisson(λ_L(z*)), and for growing λ
/// the normalization (X - λ)/√λ → N(0, 1).
struct Prediction {
  Regime regime;
  double zstar = 0;
  double lambda = 0;
  GaussianLimit gaussian;

  double poisson_pmf(std::int64_t k) const;
  double p_no_cycle() const;
};

Prediction predict(std::int64_t n, std::int64_t m, const LengthSet& L, const RegimeThresholds& thresholds = {});

/// e^{-λ_L(z*)}.
double prob_no_Lcycle(std::int64_t n, std::int64_t m, const LengthSet& L, const RegimeThresholds& thresholds = {});

}  // namespace lcycle
