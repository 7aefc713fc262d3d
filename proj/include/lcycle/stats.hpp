#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "lcycle/length_set.hpp"
#include "lcycle/predictor.hpp"

namespace lcycle {

struct Histogram {
  std::map<std::int64_t, std::int64_t> counts;
  std::int64_t trials = 0;

  void add(std::int64_t k, std::int64_t times = 1);
  void merge(const Histogram& other);
  double frequency(std::int64_t k) const;
  double mean() const;
  double variance() const;  // unbiased; 0 for fewer than two trials
};

using Pmf = std::function<double(std::int64_t)>;

struct ChiSquare {
  double stat = 0;
  std::int64_t dof = 0;
  double pvalue = 1;
};

struct RunReport {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::string length_set;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  Histogram x;       // X_{n,M}^{(L)}
  Histogram excess;  // total excess
  double complex_fraction = 0;
  double mean = 0;
  double variance = 0;
  // Empty when (n, M) has no limit law (above the critical window).
  std::optional<Prediction> prediction;
  std::optional<double> tv;
  std::optional<ChiSquare> chi2;
  std::optional<double> ks_normalized;
};

/// Trial i draws from make_stream(seed, i), so the report does not depend on
/// `workers`. workers = 0 means std::thread::hardware_concurrency().
RunReport run_trials(std::int64_t n, std::int64_t m, const LengthSet& L, std::int64_t trials, std::uint64_t seed,
                     unsigned workers = 1, const RegimeThresholds& thresholds = {});

/// ½ Σ_k |h(k)/trials - pmf(k)| over observed k, plus ½(1 - Σ_{observed} pmf(k))
/// for the pmf mass that was never observed.
double tv_distance(const Histogram& h, const Pmf& pmf);

/// sup over observed atoms k of |F_emp(k) - Φ((k - λ)/√λ)|.
double ks_normalized(const Histogram& h, double lambda);
/// Same with the empirical law given as weights summing to 1.
double ks_normalized(const std::map<std::int64_t, double>& weights, double lambda);

/// Pearson statistic over k = 0, 1, ... with a final tail bin, pooling bins
/// left to right until each expects at least `min_expected`. Throws
/// std::domain_error when fewer than two bins remain.
ChiSquare chi_square(const Histogram& h, const Pmf& pmf, double min_expected = 5.0);

/// Q(dof/2, stat/2), the upper tail of the chi-square law.
double chi_square_pvalue(double stat, std::int64_t dof);

}  // namespace lcycle
