#pragma once

// Complex numbers over an arbitrary real field type.
//
// std::complex is only specified for float/double/long double, so the
// library carries its own small template. It is instantiated with
//   Real         arbitrary-precision evaluation
//   long double  64-bit fast paths for large sampling grids
//   mpq_class    exact Gaussian rationals (ring operations only)

#include <gmpxx.h>

#include <cmath>
#include <ostream>
#include <type_traits>

#include "lidstone/real.hpp"

namespace lidstone {

template <class R>
struct Complex {
  R re{};
  R im{};

  Complex() = default;
  Complex(R r) : re(std::move(r)), im() {}  // NOLINT: implicit real embedding
  Complex(R r, R i) : re(std::move(r)), im(std::move(i)) {}
  template <class I, class = std::enable_if_t<std::is_integral_v<I> && !std::is_same_v<R, I>>>
  Complex(I r) : re(static_cast<long>(r)), im(0L) {}  // NOLINT

  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
  Complex& operator/=(const Complex& o) { return *this = *this / o; }

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Complex& a, const R& s) { return {a.re * s, a.im * s}; }
  friend Complex operator*(const R& s, const Complex& a) { return {a.re * s, a.im * s}; }
  friend Complex operator/(const Complex& a, const R& s) { return {a.re / s, a.im / s}; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    if constexpr (std::is_same_v<R, mpq_class>) {
      R d = b.re * b.re + b.im * b.im;
      return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    } else {
      // Smith's algorithm keeps intermediate magnitudes bounded.
      using std::abs;
      if (abs(b.re) >= abs(b.im)) {
        R q = b.im / b.re;
        R d = b.re + b.im * q;
        return {(a.re + a.im * q) / d, (a.im - a.re * q) / d};
      }
      R q = b.re / b.im;
      R d = b.re * q + b.im;
      return {(a.re * q + a.im) / d, (a.im * q - a.re) / d};
    }
  }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

  friend std::ostream& operator<<(std::ostream& os, const Complex& z) {
    return os << "(" << z.re << ", " << z.im << ")";
  }
};

using Cx = Complex<Real>;
using CxLD = Complex<long double>;
using GaussianRational = Complex<mpq_class>;

template <class R>
Complex<R> conj(const Complex<R>& z) { return {z.re, -z.im}; }

// |z|^2
template <class R>
R norm(const Complex<R>& z) { return z.re * z.re + z.im * z.im; }

template <class R>
R abs(const Complex<R>& z) {
  using std::hypot;
  return hypot(z.re, z.im);
}

template <class R>
R arg(const Complex<R>& z) {
  using std::atan2;
  return atan2(z.im, z.re);
}

template <class R>
Complex<R> exp(const Complex<R>& z) {
  using std::cos;
  using std::exp;
  using std::sin;
  R m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

template <class R>
Complex<R> log(const Complex<R>& z) {
  using std::log;
  return {log(abs(z)), arg(z)};
}

template <class R>
Complex<R> sin(const Complex<R>& z) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

template <class R>
Complex<R> cos(const Complex<R>& z) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  return {cos(z.re) * cosh(z.im), -(sin(z.re) * sinh(z.im))};
}

template <class R>
Complex<R> sinh(const Complex<R>& z) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  return {sinh(z.re) * cos(z.im), cosh(z.re) * sin(z.im)};
}

template <class R>
Complex<R> cosh(const Complex<R>& z) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  return {cosh(z.re) * cos(z.im), sinh(z.re) * sin(z.im)};
}

template <class R>
Complex<R> sqrt(const Complex<R>& z) {
  using std::abs;
  using std::sqrt;
  R m = abs(z);
  R a = sqrt((m + abs(z.re)) / R(2));
  if (a == R(0)) return {R(0), R(0)};
  if (z.re >= R(0)) return {a, z.im / (a * R(2))};
  R b = z.im < R(0) ? -a : a;
  return {abs(z.im) / (a * R(2)), b};
}

// z^n for integer n >= 0 by repeated squaring.
template <class R>
Complex<R> pow(Complex<R> z, unsigned long n) {
  Complex<R> result(R(1), R(0));
  while (n > 0) {
    if (n & 1U) result = result * z;
    n >>= 1U;
    if (n > 0) z = z * z;
  }
  return result;
}

// e^{i theta} at the precision of theta.
inline Cx unit_root_angle(const Real& theta) { return {cos(theta), sin(theta)}; }

inline Precision precision_of(const Cx& z) {
  if (z.re.is_literal()) return z.im.bits();
  if (z.im.is_literal()) return z.re.bits();
  return std::min(z.re.bits(), z.im.bits());
}

inline Cx to_cx(const GaussianRational& z, Precision bits) { return {Real(z.re, bits), Real(z.im, bits)}; }
inline Cx to_cx(const CxLD& z, Precision bits) {
  return {Real(static_cast<double>(z.re), bits), Real(static_cast<double>(z.im), bits)};
}
inline Cx with_precision(const Cx& z, Precision bits) { return {z.re.with_precision(bits), z.im.with_precision(bits)}; }
inline CxLD to_cxld(const Cx& z) { return {z.re.to_long_double(), z.im.to_long_double()}; }

}  // namespace lidstone
