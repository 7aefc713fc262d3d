#include "lcycle/saddle.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "lcycle/analytic.hpp"
#include "lcycle/numeric.hpp"
#include "lcycle/predictor.hpp"
#include "lcycle/sampler.hpp"

namespace lcycle {

namespace {

using cd = std::complex<double>;

// The set of lengths not in L, so that λ - λ_L is evaluated without cancelling
// two nearly equal sums.
LengthSet outside(const LengthSet& L) {
  const auto& v = L.variant();
  if (const auto* all = std::get_if<LengthSet::AllAtLeast>(&v)) {
    std::vector<std::int64_t> below;
    for (std::int64_t ell = 3; ell < all->min; ++ell) below.push_back(ell);
    return LengthSet::finite(std::move(below));
  }
  if (const auto* c = std::get_if<LengthSet::Complement>(&v)) return *c->inner;
  return LengthSet::complement(L);
}

double series_tol(unsigned bits) { return std::ldexp(1.0, -static_cast<int>(bits) - 8); }

template <class Real>
Real log_prefactor(std::int64_t n, std::int64_t m, std::int64_t k) {
  using std::lgamma;
  using std::log;
  const auto pairs = static_cast<std::int64_t>(pair_count(n));
  // n!/((n-M)! C(N,M)) = M! Π_{j<M} (n-j)/(N-j), N = C(n,2).
  Real s = lgamma(Real(m + 1)) - lgamma(Real(k + 1));
  for (std::int64_t j = 0; j < m; ++j) s += log(Real(n - j) / Real(pairs - j));
  return s;
}

// n h(ρ) = nρ - M log ρ + (n - M) log(2 - ρ) at the real point of the circle.
template <class Real>
Real nh_real(std::int64_t n, std::int64_t m, const Real& rho) {
  using std::log;
  return Real(n) * rho - Real(m) * log(rho) + Real(n - m) * log(Real(2) - rho);
}

struct Sums {
  std::vector<double> value;  // per r
  double im_over_re = 0;
};

// Σ over r <= rmax of pref_r · (1/N) Σ_j g(z_j) λ_L(z_j)^k q(z_j)^r e^{n(h(z_j) - h(ρ))},
// q = z(2-z)/(1-z)³, pref_r = exp(log_pref[r]).
template <class Real>
Sums quadrature(std::int64_t n, std::int64_t m, const LengthSet& L, std::int64_t k, std::int64_t rmax,
                double radius, std::int64_t nodes, unsigned bits, const std::vector<Real>& log_pref) {
  using C = Complex<Real>;
  using std::exp;
  using std::log;
  const double tol = std::is_floating_point_v<Real> ? 1e-17 : series_tol(bits);
  const LengthSet out = outside(L);
  const Real rho(radius);
  const Real two_pi = 2 * pi_v<Real>();
  const auto terms = static_cast<std::size_t>(rmax + 1);
  std::vector<C> acc(terms, C(Real(0)));
  std::vector<Real> peak(terms, Real(0));
  const C one(Real(1));
  const C two(Real(2));

  for (std::int64_t j = 0; j < nodes; ++j) {
    const Real theta = two_pi * Real(j - nodes / 2) / Real(nodes);
    const C z = polar(rho, theta);
    // n(h(z) - h(ρ)) with log z - log ρ = iθ exactly.
    C e = (z - C(rho)) * Real(n) - C(Real(0), Real(m) * theta) + log((two - z) / C(two - C(rho))) * Real(n - m);
    C f = (one - z) * exp(detail::lambda_eval(out, z, tol)) * exp(e);
    if (k > 0) f *= ipow(detail::lambda_eval(L, z, tol), static_cast<std::uint64_t>(k));
    const C q = z * (two - z) / ipow(one - z, 3);
    for (std::size_t r = 0; r < terms; ++r) {
      acc[r] += f;
      Real mag = abs(f);
      if (mag > peak[r]) peak[r] = mag;
      if (r + 1 < terms) f *= q;
    }
  }

  Real re(0);
  Real im(0);
  Real noise(0);
  Sums s;
  for (std::size_t r = 0; r < terms; ++r) {
    const Real scale = exp(log_pref[r]) / Real(nodes);
    const Real v = acc[r].re * scale;
    re += v;
    im += acc[r].im * scale;
    noise += peak[r] * exp(log_pref[r]);
    s.value.push_back(to_double(v));
  }
  if (re < -Real(1024) * epsilon_v<Real>() * noise) {
    throw NumericalFailure("contour quadrature returned a negative probability; raise --bits or --nodes");
  }
  using std::abs;
  s.im_over_re = to_double(Real(abs(im) / abs(re)));
  return s;
}

template <class Real>
ContourResult run(std::int64_t n, std::int64_t m, const LengthSet& L, std::int64_t k, std::int64_t rmax,
                  double radius, const ContourSpec& spec) {
  using std::log;
  const Real rho(radius);
  std::vector<Real> log_pref;
  Real base = log_prefactor<Real>(n, m, k) + Real(m - n) * log(Real(2)) + nh_real(n, m, rho);
  for (std::int64_t r = 0; r <= rmax; ++r) {
    if (r > 0) base -= log(Real(n - m + r)) + log(Real(2));
    log_pref.push_back(base + log(Real(wright_e(r).value)));
  }
  Sums s = quadrature<Real>(n, m, L, k, rmax, radius, spec.nodes, spec.bits, log_pref);
  ContourResult out;
  out.nodes = spec.nodes;
  out.bits = spec.bits;
  out.radius = radius;
  out.im_over_re = s.im_over_re;
  out.terms = s.value;
  for (double v : s.value) out.value += v;
  return out;
}

ContourResult dispatch(std::int64_t n, std::int64_t m, const LengthSet& L, std::int64_t k, std::int64_t rmax,
                       double radius, const ContourSpec& spec) {
  switch (spec.bits) {
    case 53:
      return run<double>(n, m, L, k, rmax, radius, spec);
    case 128:
      return run<Float128>(n, m, L, k, rmax, radius, spec);
    case 200:
      return run<Float200>(n, m, L, k, rmax, radius, spec);
    case 256:
      return run<Float256>(n, m, L, k, rmax, radius, spec);
    default:
      throw std::domain_error("unsupported precision");
  }
}

void check_common(std::int64_t n, std::int64_t m, std::int64_t k) {
  if (n < 3) throw std::domain_error("contour integrals need n >= 3");
  if (m < 1 || m > n) throw std::domain_error("contour integrals need 1 <= M <= n");
  if (k < 0) throw std::domain_error("k must be >= 0");
}

}  // namespace

void ContourSpec::validate() const {
  if (radius && !(*radius > 0 && *radius < 1)) {
    throw std::domain_error("contour radius must lie in (0, 1); the integrand has a branch point at z = 1");
  }
  if (nodes < 256 || !std::has_single_bit(static_cast<std::uint64_t>(nodes))) {
    throw std::domain_error("nodes must be a power of two >= 256");
  }
  if (bits != 53 && bits != 128 && bits != 200 && bits != 256) {
    throw std::domain_error("bits must be one of 53, 128, 200, 256");
  }
}

cd h_subcritical(cd z, std::int64_t n, std::int64_t m) {
  const double c = static_cast<double>(m) / static_cast<double>(n);
  return z - std::log(z) + (1.0 - c) * std::log(2.0 * z - z * z);
}

cd h_subcritical_prime(cd z, std::int64_t n, std::int64_t m) {
  const double c = static_cast<double>(m) / static_cast<double>(n);
  return 1.0 - 1.0 / z + (1.0 - c) * (2.0 - 2.0 * z) / (2.0 * z - z * z);
}

cd h1(cd z, std::int64_t n, std::int64_t m) {
  const double c = static_cast<double>(m) / static_cast<double>(n);
  return z - 1.0 - c * std::log(z) + (1.0 - c) * std::log(2.0 - z);
}

cd h1_prime(cd z, std::int64_t n, std::int64_t m) {
  const double c = static_cast<double>(m) / static_cast<double>(n);
  return 1.0 - c / z - (1.0 - c) / (2.0 - z);
}

cd g_subcritical(cd z, const LengthSet& L) {
  auto w = Complex<double>::from(z);
  Complex<double> one(1.0);
  return ((one - w) * exp(detail::lambda_eval(outside(L), w, 1e-17))).to_std();
}

double log_exact_prefactor(std::int64_t n, std::int64_t m, std::int64_t k) {
  if (n < 2 || m < 0 || m > n || k < 0) throw std::domain_error("log_exact_prefactor needs 0 <= M <= n, k >= 0");
  return to_double(log_prefactor<Float128>(n, m, k));
}

double log_stirling_prefactor(std::int64_t n, std::int64_t m, std::int64_t k) {
  if (m <= 0 || m >= n || k < 0) throw std::domain_error("stirling_prefactor needs 0 < M < n, k >= 0");
  const auto nd = static_cast<double>(n);
  const auto md = static_cast<double>(m);
  const double log_value = -std::lgamma(static_cast<double>(k) + 1.0) +
                           0.5 * std::log(2 * pi_v<double>() * nd * md / (nd - md)) + md * std::log(2.0) +
                           nd * std::log(nd) + md * std::log(md) - 2 * md * std::log(nd) -
                           (nd - md) * std::log(nd - md) - 2 * md + md / nd + md * md / (nd * nd);
  return log_value;
}

double stirling_prefactor(std::int64_t n, std::int64_t m, std::int64_t k) {
  return std::exp(log_stirling_prefactor(n, m, k));
}

ContourResult contour_prob_subcritical(std::int64_t n, std::int64_t m, const LengthSet& L, std::int64_t k,
                                       const ContourSpec& spec) {
  spec.validate();
  check_common(n, m, k);
  const double radius = spec.radius.value_or(2.0 * static_cast<double>(m) / static_cast<double>(n));
  if (!(radius < 1)) {
    throw std::domain_error("saddle radius 2M/n = " + std::to_string(radius) +
                            " is not below 1; use the critical contour");
  }
  return dispatch(n, m, L, k, 0, radius, spec);
}

ContourResult contour_prob_critical(std::int64_t n, std::int64_t m, const LengthSet& L, std::int64_t k,
                                    std::int64_t rmax, const ContourSpec& spec) {
  spec.validate();
  check_common(n, m, k);
  if (rmax < 0 || rmax * rmax * rmax > n) {
    throw std::domain_error("rmax must satisfy 0 <= rmax <= n^{1/3}");
  }
  Regime reg = regime_of(n, m);
  if (reg.tag != RegimeTag::Critical) {
    throw std::domain_error("contour_prob_critical needs (n, M) inside the critical window");
  }
  const double radius = spec.radius.value_or(std::exp(-*reg.alpha / std::cbrt(static_cast<double>(n))));
  return dispatch(n, m, L, k, rmax, radius, spec);
}

}  // namespace lcycle
