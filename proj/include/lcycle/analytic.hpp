#pragma once

// Generating functions of the graph classes that make up G(n, M), the Wright
// constants of the critical window, the excess special function A(y, μ), and
// the Poisson-to-Gaussian local approximation.

#include <cstdint>
#include <vector>

#include "lcycle/length_set.hpp"
#include "lcycle/numeric.hpp"
#include "lcycle/power_series.hpp"

namespace lcycle {

using RationalSeries = PowerSeries<Rational>;

/// Hard cap on exact series orders.
inline constexpr std::size_t kMaxSeriesOrder = 2000;

/// T(x) = x e^{T(x)} = Σ n^{n-1} x^n / n!, rooted labelled trees.
RationalSeries tree_series(std::size_t order);

/// W₋₁ = T - T²/2, unrooted labelled trees.
RationalSeries unrooted_series(std::size_t order);

/// W₀ = -½log(1-T) - T/2 - T²/4, connected unicyclic graphs.
RationalSeries unicyclic_series(std::size_t order);

/// Σ_{ℓ∈L, ℓ<=order} T^ℓ / (2ℓ). Exact through x^order since T starts at x.
RationalSeries lambda_of_T_series(const LengthSet& L, std::size_t order);

/// e_r = (6r)! / (2^{5r} 3^{2r} (3r)! (2r)!).
struct WrightConstant {
  std::int64_t r = 0;
  Rational value;

  /// log e_r through log-gamma; usable far beyond where `value` is cheap.
  double log_value() const;
};

WrightConstant wright_e(std::int64_t r);
double wright_e_log(std::int64_t r);

/// 1/Γ(x), zero at the nonpositive integers.
double reciprocal_gamma(double x);

/// A(y, μ) = e^{-μ³/6} 3^{-(y+1)/3} Σ_k (½·3^{2/3}μ)^k / (k! Γ((y+1-2k)/3)).
/// Summation stops once three consecutive terms sit below tol and the
/// geometric majorant of the remainder does as well.
double big_A(double y, double mu, double tol = 1e-16);

/// Unique positive α with μ = 1/α - α.
double solve_alpha(double mu);

/// p_r = √(2π) e_r A(3r+½, μ), the limiting law of the total excess, r = 0..rmax.
std::vector<double> excess_dist(double mu, std::int64_t rmax, double tol = 1e-16);

/// Local normal approximation to the Poisson(λ) pmf at k:
/// (2πλ)^{-1/2} e^{-ρ²/2} (1 + (ρ³ - 3ρ) / (6√λ)), ρ = (k - λ)/√λ.
double kolchin_approx(double lambda, std::int64_t k);

/// Poisson(λ) pmf evaluated through log-gamma.
double poisson_pmf(double lambda, std::int64_t k);

}  // namespace lcycle
