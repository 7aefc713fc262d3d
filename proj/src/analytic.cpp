#include "lcycle/analytic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace lcycle {

namespace {

void check_order(std::size_t order) {
  if (order > kMaxSeriesOrder) {
    throw std::domain_error("series order " + std::to_string(order) + " exceeds the cap of " +
                            std::to_string(kMaxSeriesOrder));
  }
}

BigInt factorial(std::int64_t n) {
  BigInt f = 1;
  for (std::int64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// Σ_{ℓ∈members} T^ℓ / (2ℓ), walking the powers of T upwards.
RationalSeries sum_tree_powers(const RationalSeries& tree, const std::vector<std::int64_t>& members) {
  RationalSeries out(tree.order());
  if (members.empty()) return out;
  RationalSeries power = pow(tree, static_cast<std::size_t>(members.front()));
  std::int64_t at = members.front();
  for (std::int64_t ell : members) {
    while (at < ell) {
      power = power * tree;
      ++at;
    }
    out += power / Rational(2 * ell);
  }
  return out;
}

// Scaled evaluation of the A(y, μ) series: returns (sum, log_scale) with
// A = sum · exp(log_scale).
struct ScaledSum {
  long double mantissa = 0;
  double log_scale = 0;
};

ScaledSum big_A_scaled(double y, double mu, double tol) {
  if (!std::isfinite(y) || !std::isfinite(mu)) throw std::domain_error("big_A needs finite y and mu");
  if (!(tol > 0)) throw std::domain_error("big_A needs tol > 0");

  const double w = 0.5 * std::cbrt(9.0) * mu;
  const double log_w = std::log(std::abs(w));
  const double prefactor_log = -mu * mu * mu / 6.0 - (y + 1.0) / 3.0 * std::log(3.0);

  // Terms are stored as sign · exp(log magnitude) and rescaled to the largest
  // magnitude seen so far, so arguments like y = 3r + ½ with r in the hundreds
  // neither underflow nor lose the final product with e_r.
  double scale = -std::numeric_limits<double>::infinity();
  long double acc = 0;
  int quiet_run = 0;
  constexpr std::int64_t kMaxTerms = 200000;

  for (std::int64_t k = 0; k < kMaxTerms; ++k) {
    const double x = (y + 1.0 - 2.0 * static_cast<double>(k)) / 3.0;
    double term_log = -std::numeric_limits<double>::infinity();
    int sign = 0;
    const bool pole = x <= 0 && x == std::floor(x);
    if (!pole && (k == 0 || w != 0)) {
      int gamma_sign = 1;
      double lg = ::lgamma_r(x, &gamma_sign);
      term_log = (k == 0 ? 0.0 : static_cast<double>(k) * log_w) - std::lgamma(static_cast<double>(k) + 1.0) - lg;
      sign = gamma_sign * ((w < 0 && (k % 2) == 1) ? -1 : 1);
    }
    if (sign != 0 && term_log > scale) {
      acc *= std::exp(static_cast<long double>(scale - term_log));
      scale = term_log;
    }
    long double term = sign == 0 ? 0.0L : sign * std::exp(static_cast<long double>(term_log - scale));
    acc += term;

    if (w == 0) break;  // only k = 0 survives
    // Asymptotic bound on |t_{k+1}/t_k| ~ |w| |x|^{2/3} / (k+1), with slack.
    const double ratio = 2.0 * std::abs(w) * std::pow(1.0 + std::abs(x), 2.0 / 3.0) / (static_cast<double>(k) + 1.0);
    const long double rel = std::abs(term);
    if (rel <= tol && ratio < 0.5) {
      const long double tail = rel * ratio / (1.0 - ratio);
      quiet_run = tail <= tol ? quiet_run + 1 : 0;
      if (quiet_run >= 3) break;
    } else {
      quiet_run = 0;
    }
  }
  return {acc, prefactor_log + scale};
}

}  // namespace

RationalSeries tree_series(std::size_t order) {
  check_order(order);
  RationalSeries t(order);
  BigInt fact = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    fact *= n;
    BigInt numer = bmp::pow(BigInt(n), static_cast<unsigned>(n - 1));
    t[n] = Rational(numer, fact);
  }
  return t;
}

RationalSeries unrooted_series(std::size_t order) {
  RationalSeries t = tree_series(order);
  return t - (t * t) / Rational(2);
}

RationalSeries unicyclic_series(std::size_t order) {
  RationalSeries t = tree_series(order);
  return -(log1p(-t) / Rational(2)) - t / Rational(2) - (t * t) / Rational(4);
}

RationalSeries lambda_of_T_series(const LengthSet& L, std::size_t order) {
  check_order(order);
  const auto& v = L.variant();
  if (const auto* all = std::get_if<LengthSet::AllAtLeast>(&v)) {
    RationalSeries w0 = unicyclic_series(order);
    std::vector<std::int64_t> below;
    for (std::int64_t ell = 3; ell < all->min && ell <= static_cast<std::int64_t>(order); ++ell) below.push_back(ell);
    return w0 - sum_tree_powers(tree_series(order), below);
  }
  if (const auto* c = std::get_if<LengthSet::Complement>(&v)) {
    return unicyclic_series(order) - lambda_of_T_series(*c->inner, order);
  }
  return sum_tree_powers(tree_series(order), L.members_up_to(static_cast<std::int64_t>(order)));
}

double WrightConstant::log_value() const { return wright_e_log(r); }

WrightConstant wright_e(std::int64_t r) {
  if (r < 0) throw std::domain_error("wright_e needs r >= 0");
  BigInt numer = factorial(6 * r);
  BigInt denom = bmp::pow(BigInt(2), static_cast<unsigned>(5 * r)) *
                 bmp::pow(BigInt(3), static_cast<unsigned>(2 * r)) * factorial(3 * r) * factorial(2 * r);
  return {r, Rational(numer, denom)};
}

double wright_e_log(std::int64_t r) {
  if (r < 0) throw std::domain_error("wright_e needs r >= 0");
  const auto rd = static_cast<double>(r);
  return std::lgamma(6 * rd + 1) - 5 * rd * std::log(2.0) - 2 * rd * std::log(3.0) - std::lgamma(3 * rd + 1) -
         std::lgamma(2 * rd + 1);
}

double reciprocal_gamma(double x) {
  if (x <= 0 && x == std::floor(x)) return 0.0;
  int sign = 1;
  double lg = ::lgamma_r(x, &sign);
  return sign * std::exp(-lg);
}

double big_A(double y, double mu, double tol) {
  ScaledSum s = big_A_scaled(y, mu, tol);
  return static_cast<double>(s.mantissa * std::exp(static_cast<long double>(s.log_scale)));
}

double solve_alpha(double mu) {
  if (!std::isfinite(mu)) throw std::domain_error("solve_alpha needs a finite mu");
  const double root = std::sqrt(mu * mu + 4.0);
  // Both branches avoid subtracting nearly equal numbers.
  return mu >= 0 ? 2.0 / (root + mu) : (root - mu) / 2.0;
}

std::vector<double> excess_dist(double mu, std::int64_t rmax, double tol) {
  if (rmax < 0) throw std::domain_error("excess_dist needs rmax >= 0");
  std::vector<double> p;
  p.reserve(static_cast<std::size_t>(rmax) + 1);
  const double log_sqrt_2pi = 0.5 * std::log(2.0 * pi_v<double>());
  for (std::int64_t r = 0; r <= rmax; ++r) {
    ScaledSum s = big_A_scaled(3.0 * static_cast<double>(r) + 0.5, mu, tol);
    long double v = s.mantissa * std::exp(static_cast<long double>(s.log_scale + wright_e_log(r) + log_sqrt_2pi));
    p.push_back(static_cast<double>(v));
  }
  return p;
}

double kolchin_approx(double lambda, std::int64_t k) {
  if (!(lambda > 0)) throw std::domain_error("kolchin_approx needs lambda > 0");
  const double root = std::sqrt(lambda);
  const double rho = (static_cast<double>(k) - lambda) / root;
  const double main = std::exp(-rho * rho / 2) / std::sqrt(2 * pi_v<double>() * lambda);
  return main * (1.0 + (rho * rho * rho - 3.0 * rho) / (6.0 * root));
}

double poisson_pmf(double lambda, std::int64_t k) {
  if (lambda < 0) throw std::domain_error("poisson_pmf needs lambda >= 0");
  if (k < 0) return 0.0;
  if (lambda == 0) return k == 0 ? 1.0 : 0.0;
  const auto kd = static_cast<double>(k);
  return std::exp(-lambda + kd * std::log(lambda) - std::lgamma(kd + 1));
}

}  // namespace lcycle
