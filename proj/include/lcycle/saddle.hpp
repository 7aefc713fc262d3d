#pragma once

// Pr[X = k] by trapezoid quadrature of the Cauchy coefficient integral on a
// circle through the saddle point, after the substitution z = T(x).

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lcycle/length_set.hpp"

namespace lcycle {

struct ContourSpec {
  std::optional<double> radius;  // default: the saddle point of the regime
  std::int64_t nodes = 4096;     // power of two, >= 256
  unsigned bits = 128;           // 53 (double), 128, 200 or 256

  /// Throws std::domain_error for an invalid radius, node count or precision.
  void validate() const;
};

struct ContourResult {
  double value = 0;
  double im_over_re = 0;  // |Im| / |Re| of the normalized quadrature sum
  std::int64_t nodes = 0;
  unsigned bits = 0;
  double radius = 0;
  std::vector<double> terms;  // critical: contribution of each total excess r
};

/// The quadrature produced a negative probability beyond rounding noise.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// h(z) = z - log z + (1 - M/n) log(2z - z²), with h'(2M/n) = h'(1) = 0.
std::complex<double> h_subcritical(std::complex<double> z, std::int64_t n, std::int64_t m);
std::complex<double> h_subcritical_prime(std::complex<double> z, std::int64_t n, std::int64_t m);

/// h₁(z) = z - 1 - (M/n) log z + (1 - M/n) log(2 - z); h₁(1) = 0, and
/// h₁'(1) = 0 exactly when M = n/2.
std::complex<double> h1(std::complex<double> z, std::int64_t n, std::int64_t m);
std::complex<double> h1_prime(std::complex<double> z, std::int64_t n, std::int64_t m);

/// g(z) = (1 - z) e^{λ(z) - λ_L(z)}.
std::complex<double> g_subcritical(std::complex<double> z, const LengthSet& L);

/// log[n! / (C(C(n,2),M) (n-M)! k!)], exact up to rounding.
double log_exact_prefactor(std::int64_t n, std::int64_t m, std::int64_t k);

/// Stirling form of the same prefactor:
/// (1/k!) √(2πnM/(n-M)) 2^M nⁿ M^M / (n^{2M} (n-M)^{n-M}) exp(-2M + M/n + M²/n²).
double stirling_prefactor(std::int64_t n, std::int64_t m, std::int64_t k);
double log_stirling_prefactor(std::int64_t n, std::int64_t m, std::int64_t k);

/// Pr[X = k, no complex component] as
/// prefactor · 2^{M-n} (1/2πi)∮ g(z) λ_L(z)^k e^{n h(z)} dz/z on |z| = 2M/n.
ContourResult contour_prob_subcritical(std::int64_t n, std::int64_t m, const LengthSet& L, std::int64_t k,
                                       const ContourSpec& spec = {});

/// Critical-window Pr[X = k] summed over total excess r = 0..rmax, the complex
/// part replaced by e_r/(1 - T)^{3r}, on the circle |z| = e^{-α n^{-1/3}}.
/// Requires the critical regime and rmax³ <= n.
ContourResult contour_prob_critical(std::int64_t n, std::int64_t m, const LengthSet& L, std::int64_t k,
                                    std::int64_t rmax, const ContourSpec& spec = {});

}  // namespace lcycle
