#pragma once

// Truncated power series Σ_{i<=N} c_i x^i over an arbitrary coefficient field.
// With S = Rational every operation is exact on the retained coefficients:
// coefficient i of a result only reads coefficients <= i of the inputs.

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lcycle {

template <class S>
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order = 0) : c_(order + 1, S(0)) {}
  explicit PowerSeries(std::vector<S> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.emplace_back(0);
  }

  static PowerSeries x(std::size_t order) {
    PowerSeries s(order);
    if (order >= 1) s.c_[1] = S(1);
    return s;
  }
  static PowerSeries constant(std::size_t order, S value) {
    PowerSeries s(order);
    s.c_[0] = std::move(value);
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }
  const S& operator[](std::size_t i) const { return c_[i]; }
  S& operator[](std::size_t i) { return c_[i]; }
  std::span<const S> coefficients() const { return c_; }

  /// Index of the first nonzero coefficient, or order()+1 for the zero series.
  std::size_t valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] != 0) return i;
    }
    return c_.size();
  }

  PowerSeries truncated(std::size_t order) const {
    std::vector<S> c(order + 1, S(0));
    std::copy_n(c_.begin(), std::min(order, this->order()) + 1, c.begin());
    return PowerSeries(std::move(c));
  }

  PowerSeries& operator+=(const PowerSeries& o) {
    shrink_to(o.order());
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  PowerSeries& operator-=(const PowerSeries& o) {
    shrink_to(o.order());
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  PowerSeries& operator*=(const S& s) {
    for (auto& v : c_) v *= s;
    return *this;
  }
  PowerSeries& operator/=(const S& s) {
    for (auto& v : c_) v /= s;
    return *this;
  }

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator-(PowerSeries a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend PowerSeries operator*(PowerSeries a, const S& s) { return a *= s; }
  friend PowerSeries operator*(const S& s, PowerSeries a) { return a *= s; }
  friend PowerSeries operator/(PowerSeries a, const S& s) { return a /= s; }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    PowerSeries out(n);
    std::size_t va = a.valuation();
    std::size_t vb = b.valuation();
    for (std::size_t i = va; i <= n; ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = vb; i + j <= n; ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return out;
  }
  PowerSeries& operator*=(const PowerSeries& o) { return *this = *this * o; }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }

 private:
  void shrink_to(std::size_t order) {
    if (order < this->order()) c_.resize(order + 1);
  }

  std::vector<S> c_;
};

/// [x^n] of a·b without forming the product.
template <class S>
S coefficient_of_product(const PowerSeries<S>& a, const PowerSeries<S>& b, std::size_t n) {
  if (n > a.order() || n > b.order()) throw std::out_of_range("coefficient beyond series order");
  S acc(0);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] != 0 && b[n - i] != 0) acc += a[i] * b[n - i];
  }
  return acc;
}

/// exp(s); requires s(0) = 0.
template <class S>
PowerSeries<S> exp(const PowerSeries<S>& s) {
  if (s[0] != 0) throw std::domain_error("series exp needs a zero constant term");
  std::size_t n = s.order();
  PowerSeries<S> e(n);
  e[0] = S(1);
  // m e_m = Σ_{k=1}^{m} k s_k e_{m-k}
  for (std::size_t m = 1; m <= n; ++m) {
    S acc(0);
    for (std::size_t k = 1; k <= m; ++k) {
      if (s[k] != 0) acc += S(static_cast<long>(k)) * s[k] * e[m - k];
    }
    e[m] = acc / S(static_cast<long>(m));
  }
  return e;
}

/// log(1 + s); requires s(0) = 0.
template <class S>
PowerSeries<S> log1p(const PowerSeries<S>& s) {
  if (s[0] != 0) throw std::domain_error("series log1p needs a zero constant term");
  std::size_t n = s.order();
  PowerSeries<S> l(n);
  // m l_m = m s_m - Σ_{k=1}^{m-1} k l_k s_{m-k}
  for (std::size_t m = 1; m <= n; ++m) {
    S acc = S(static_cast<long>(m)) * s[m];
    for (std::size_t k = 1; k < m; ++k) {
      if (s[m - k] != 0) acc -= S(static_cast<long>(k)) * l[k] * s[m - k];
    }
    l[m] = acc / S(static_cast<long>(m));
  }
  return l;
}

/// s^p truncated at the order of s.
template <class S>
PowerSeries<S> pow(const PowerSeries<S>& s, std::size_t p) {
  std::size_t n = s.order();
  if (p == 0) return PowerSeries<S>::constant(n, S(1));
  std::size_t v = s.valuation();
  if (v > n || v * p > n) return PowerSeries<S>(n);
  // s = x^v u with u(0) != 0; only n - v p coefficients of u^p are needed.
  std::size_t shift = v * p;
  std::size_t keep = n - shift;
  std::vector<S> u(keep + 1, S(0));
  for (std::size_t i = 0; i <= keep && v + i <= n; ++i) u[i] = s[v + i];
  PowerSeries<S> base(std::move(u));
  PowerSeries<S> acc = PowerSeries<S>::constant(keep, S(1));
  while (p != 0) {
    if ((p & 1u) != 0) acc = acc * base;
    p >>= 1u;
    if (p != 0) base = base * base;
  }
  PowerSeries<S> out(n);
  for (std::size_t i = 0; i <= keep; ++i) out[shift + i] = acc[i];
  return out;
}

/// f(g(x)) by Horner's rule; requires g(0) = 0.
template <class S>
PowerSeries<S> compose(const PowerSeries<S>& f, const PowerSeries<S>& g) {
  if (g[0] != 0) throw std::domain_error("series composition needs g(0) = 0");
  std::size_t n = g.order();
  PowerSeries<S> out = PowerSeries<S>::constant(n, f[std::min(f.order(), n)]);
  for (std::size_t i = std::min(f.order(), n); i-- > 0;) {
    out = out * g;
    out[0] += f[i];
  }
  return out;
}

template <class To, class From>
PowerSeries<To> series_cast(const PowerSeries<From>& s) {
  std::vector<To> c;
  c.reserve(s.order() + 1);
  for (const auto& v : s.coefficients()) c.push_back(To(v));
  return PowerSeries<To>(std::move(c));
}

}  // namespace lcycle
