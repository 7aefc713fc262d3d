#include "lcycle/exact.hpp"

#include <stdexcept>
#include <string>

#include "lcycle/components.hpp"
#include "lcycle/sampler.hpp"

namespace lcycle {

namespace {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt b = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

BigInt factorial(std::int64_t n) {
  BigInt f = 1;
  for (std::int64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

void check_graph(std::int64_t n, std::int64_t m) {
  if (n < 1) throw std::domain_error("needs n >= 1");
  if (m < 0 || static_cast<std::uint64_t>(m) > pair_count(n)) {
    throw std::domain_error("needs 0 <= M <= C(n,2)");
  }
}

void check_egf(std::int64_t n, std::int64_t m) {
  check_graph(n, m);
  if (m > n) {
    throw std::domain_error("M = " + std::to_string(m) + " > n = " + std::to_string(n) +
                            ": every graph has a complex component");
  }
  if (static_cast<std::size_t>(n) > kMaxSeriesOrder) {
    throw std::domain_error("n exceeds the exact series order cap");
  }
}

// W₋₁^{n-M}/(n-M)! · e^{W₀-λ_L(T)} and λ_L(T), both through x^n.
struct EgfParts {
  RationalSeries base;
  RationalSeries lam;
};

EgfParts egf_parts(std::int64_t n, std::int64_t m, const LengthSet& L) {
  const auto order = static_cast<std::size_t>(n);
  RationalSeries lam = lambda_of_T_series(L, order);
  RationalSeries rest = exp(unicyclic_series(order) - lam);
  RationalSeries trees = pow(unrooted_series(order), static_cast<std::size_t>(n - m));
  trees /= Rational(factorial(n - m));
  return {trees * rest, std::move(lam)};
}

std::int64_t max_k(std::int64_t n, const LengthSet& L) {
  auto lo = L.min_element();
  return lo ? n / *lo : 0;
}

}  // namespace

BruteForceResult brute_force_dist(std::int64_t n, std::int64_t m, const LengthSet& L) {
  check_graph(n, m);
  if (n > kBruteForceMaxN) throw std::domain_error("brute force is limited to n <= 8");
  const std::uint64_t pairs = pair_count(n);
  BigInt sets = binomial(pairs, static_cast<std::uint64_t>(m));
  if (sets > kBruteForceMaxSets) {
    throw std::domain_error("brute force refuses C(C(n,2),M) = " + sets.str() + " > 10^7 edge sets");
  }

  std::vector<Edge> all;
  for (std::uint64_t i = 0; i < pairs; ++i) all.push_back(edge_unrank(n, i));

  std::map<std::int64_t, std::int64_t> counts;
  std::int64_t complex_sets = 0;
  ComponentCensus census;
  std::vector<std::size_t> pick(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = i;
  std::vector<Edge> edges(pick.size());
  while (true) {
    for (std::size_t i = 0; i < pick.size(); ++i) edges[i] = all[pick[i]];
    census.run(n, edges);
    TrialStats s = census.stats(L);
    if (s.num_complex > 0) {
      ++complex_sets;
    } else {
      ++counts[s.x_L];
    }
    // Next combination in lexicographic order.
    std::size_t i = pick.size();
    while (i > 0 && pick[i - 1] == pairs - pick.size() + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
  }

  BruteForceResult out;
  out.edge_sets = sets;
  for (const auto& [k, c] : counts) out.dist[k] = Rational(BigInt(c), sets);
  out.p_complex = Rational(BigInt(complex_sets), sets);
  return out;
}

Rational egf_prefactor(std::int64_t n, std::int64_t m) {
  check_graph(n, m);
  return Rational(factorial(n), binomial(pair_count(n), static_cast<std::uint64_t>(m)));
}

Rational egf_prob(std::int64_t n, std::int64_t m, const LengthSet& L, std::int64_t k) {
  check_egf(n, m);
  if (k < 0) throw std::domain_error("egf_prob needs k >= 0");
  if (k > max_k(n, L)) return Rational(0);
  EgfParts parts = egf_parts(n, m, L);
  RationalSeries lamk = pow(parts.lam, static_cast<std::size_t>(k)) / Rational(factorial(k));
  return egf_prefactor(n, m) * coefficient_of_product(parts.base, lamk, static_cast<std::size_t>(n));
}

std::vector<Rational> egf_dist(std::int64_t n, std::int64_t m, const LengthSet& L) {
  check_egf(n, m);
  EgfParts parts = egf_parts(n, m, L);
  const Rational pref = egf_prefactor(n, m);
  const auto order = static_cast<std::size_t>(n);
  std::vector<Rational> out;
  RationalSeries lamk = RationalSeries::constant(order, Rational(1));
  for (std::int64_t k = 0; k <= max_k(n, L); ++k) {
    if (k > 0) lamk = lamk * parts.lam / Rational(k);
    out.push_back(pref * coefficient_of_product(parts.base, lamk, order));
  }
  return out;
}

std::vector<std::vector<Float200>> egf_critical_table(std::int64_t n, std::int64_t m, const LengthSet& L,
                                                      std::int64_t kmax, std::int64_t rmax) {
  check_egf(n, m);
  if (rmax < 0 || kmax < 0) throw std::domain_error("egf_critical_table needs kmax, rmax >= 0");
  if (rmax * rmax * rmax > n) {
    throw std::domain_error("r = " + std::to_string(rmax) + " exceeds n^{1/3} for n = " + std::to_string(n));
  }
  using Series = PowerSeries<Float200>;
  const auto order = static_cast<std::size_t>(n);

  RationalSeries tree = tree_series(order);
  Series t = series_cast<Float200>(tree);
  Series w = series_cast<Float200>(unrooted_series(order));
  Series lam = series_cast<Float200>(lambda_of_T_series(L, order));
  Series rest = exp(series_cast<Float200>(unicyclic_series(order)) - lam);
  // 1/(1-T)^3 = exp(-3 log(1-T)).
  Series inv_cube = exp(log1p(-t) * Float200(-3));

  Series trees = pow(w, static_cast<std::size_t>(n - m)) * rest;
  const Float200 pref = Float200(egf_prefactor(n, m));
  Float200 fact = Float200(factorial(n - m));

  std::vector<Series> lamk;
  lamk.push_back(Series::constant(order, Float200(1)));
  for (std::int64_t k = 1; k <= kmax; ++k) lamk.push_back(lamk.back() * lam / Float200(k));

  std::vector<std::vector<Float200>> table;
  Series surrogate = Series::constant(order, Float200(1));
  for (std::int64_t r = 0; r <= rmax; ++r) {
    if (r > 0) {
      trees = trees * w;
      fact *= Float200(n - m + r);
      surrogate = surrogate * inv_cube;
    }
    const Float200 scale = pref * Float200(wright_e(r).value) / fact;
    Series body = trees * surrogate;
    std::vector<Float200> row;
    for (std::int64_t k = 0; k <= kmax; ++k) {
      row.push_back(scale * coefficient_of_product(body, lamk[static_cast<std::size_t>(k)], order));
    }
    table.push_back(std::move(row));
  }
  return table;
}

Float200 egf_prob_critical(std::int64_t n, std::int64_t m, const LengthSet& L, std::int64_t k, std::int64_t r) {
  if (k < 0 || r < 0) throw std::domain_error("egf_prob_critical needs k, r >= 0");
  check_egf(n, m);
  if (r * r * r > n) {
    throw std::domain_error("r = " + std::to_string(r) + " exceeds n^{1/3} for n = " + std::to_string(n));
  }
  auto table = egf_critical_table(n, m, L, k, r);
  return table[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
}

}  // namespace lcycle
