#pragma once

// Exact distribution of X_{n,M}^{(L)} restricted to graphs without complex
// components, from two independent routes: exhaustive enumeration of edge sets
// and coefficient extraction from the generating-function formula.

#include <cstdint>
#include <map>
#include <vector>

#include "lcycle/analytic.hpp"
#include "lcycle/length_set.hpp"
#include "lcycle/numeric.hpp"

namespace lcycle {

/// Enumeration limits for brute_force_dist.
inline constexpr std::int64_t kBruteForceMaxN = 8;
inline constexpr std::int64_t kBruteForceMaxSets = 10'000'000;

struct BruteForceResult {
  std::map<std::int64_t, Rational> dist;  // Pr[X = k and no complex component]
  Rational p_complex;                     // Pr[some complex component]
  BigInt edge_sets;                       // C(C(n,2), M)

  Rational p_no_complex() const { return Rational(1) - p_complex; }
};

/// Walks every M-subset of the C(n,2) possible edges. Throws std::domain_error
/// beyond kBruteForceMaxN vertices or kBruteForceMaxSets edge sets.
BruteForceResult brute_force_dist(std::int64_t n, std::int64_t m, const LengthSet& L);

/// n! / C(C(n,2), M).
Rational egf_prefactor(std::int64_t n, std::int64_t m);

/// (n!/C(C(n,2),M)) [x^n] W₋₁^{n-M}/(n-M)! · λ_L(T)^k/k! · e^{W₀-λ_L(T)}.
/// Throws std::domain_error when M > n.
Rational egf_prob(std::int64_t n, std::int64_t m, const LengthSet& L, std::int64_t k);

/// egf_prob for k = 0, 1, ... up to the last k that can be nonzero
/// (k·min(L) <= n). Shares the series work across k.
std::vector<Rational> egf_dist(std::int64_t n, std::int64_t m, const LengthSet& L);

/// Contribution of total excess r in the critical window with the complex
/// part replaced by e_r / (1 - T)^{3r}:
/// (n!/C(C(n,2),M)) [x^n] W₋₁^{n-M+r}/(n-M+r)! · e_r/(1-T)^{3r} · λ_L(T)^k/k! · e^{W₀-λ_L(T)}.
/// Requires 0 <= r with r³ <= n; r = 0 reproduces egf_prob.
Float200 egf_prob_critical(std::int64_t n, std::int64_t m, const LengthSet& L, std::int64_t k, std::int64_t r);

/// table[r][k] = egf_prob_critical(n, M, L, k, r) for r <= rmax, k <= kmax.
std::vector<std::vector<Float200>> egf_critical_table(std::int64_t n, std::int64_t m, const LengthSet& L,
                                                      std::int64_t kmax, std::int64_t rmax);

}  // namespace lcycle
