#pragma once

// Scalar types shared by the library: exact integers and rationals (GMP), fixed
// precision binary floats (MPFR), and a small complex type that works for both
// `double` and the multiprecision reals.

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace lcycle {

namespace bmp = boost::multiprecision;

using BigInt = bmp::mpz_int;
using Rational = bmp::mpq_rational;

/// Binary float with at least `Bits` bits of mantissa.
template <unsigned Bits>
using BinaryFloat =
    bmp::number<bmp::mpfr_float_backend<(Bits * 30103u + 99999u) / 100000u>, bmp::et_off>;

using Float128 = BinaryFloat<128>;
using Float200 = BinaryFloat<200>;
using Float256 = BinaryFloat<256>;

template <class Real>
Real pi_v() {
  if constexpr (std::is_floating_point_v<Real>) {
    return static_cast<Real>(3.141592653589793238462643383279502884L);
  } else {
    return boost::math::constants::pi<Real>();
  }
}

template <class Real>
Real epsilon_v() {
  return std::numeric_limits<Real>::epsilon();
}

template <class Real>
double to_double(const Real& x) {
  return static_cast<double>(x);
}

/// Minimal complex number over any real type with ADL-visible exp/log/sin/cos.
template <class Real>
struct Complex {
  Real re{0};
  Real im{0};

  Complex() = default;
  Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  template <class Other>
  static Complex from(const std::complex<Other>& z) {
    return {Real(z.real()), Real(z.imag())};
  }

  std::complex<double> to_std() const { return {to_double(re), to_double(im)}; }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    Real d = o.re * o.re + o.im * o.im;
    Real r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
  }
  Complex& operator*=(const Real& s) {
    re *= s;
    im *= s;
    return *this;
  }
  Complex& operator/=(const Real& s) {
    re /= s;
    im /= s;
    return *this;
  }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(Complex a, const Real& s) { return a *= s; }
  friend Complex operator*(const Real& s, Complex a) { return a *= s; }
  friend Complex operator/(Complex a, const Real& s) { return a /= s; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
};

template <class Real>
Real abs(const Complex<Real>& z) {
  if constexpr (std::is_floating_point_v<Real>) {
    return std::hypot(z.re, z.im);
  } else {
    return sqrt(z.re * z.re + z.im * z.im);
  }
}

template <class Real>
Real arg(const Complex<Real>& z) {
  using std::atan2;
  return atan2(z.im, z.re);
}

template <class Real>
Complex<Real> polar(const Real& r, const Real& theta) {
  using std::cos;
  using std::sin;
  return {r * cos(theta), r * sin(theta)};
}

template <class Real>
Complex<Real> exp(const Complex<Real>& z) {
  using std::exp;
  return polar(Real(exp(z.re)), z.im);
}

/// Principal branch.
template <class Real>
Complex<Real> log(const Complex<Real>& z) {
  using std::log;
  return {log(abs(z)), arg(z)};
}

template <class Real>
Complex<Real> ipow(Complex<Real> base, std::uint64_t e) {
  Complex<Real> out(Real(1));
  while (e != 0) {
    if ((e & 1u) != 0) out *= base;
    base *= base;
    e >>= 1u;
  }
  return out;
}

}  // namespace lcycle
