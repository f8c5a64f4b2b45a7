#pragma once

// Arbitrary-precision binary floating point backed by MPFR.
//
// Every value carries its own precision in bits. The result of a binary
// operation is computed at the smaller of the two operand precisions.
// Values converted implicitly from built-in integers and doubles are exact
// "literals": they adopt the precision of whatever they are combined with.

#include <mpfr.h>
#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>

namespace lidstone {

using Precision = mpfr_prec_t;

inline constexpr Precision kMinPrecision = 64;
inline constexpr Precision kDefaultPrecision = 256;

class Real {
 public:
  Real() { init(kMinPrecision, true); mpfr_set_zero(v_, 1); }

  // Exact literals: adopt the precision of the other operand.
  Real(int x) { init(kMinPrecision, true); mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(long x) { init(kMinPrecision, true); mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(long long x) { init(kMinPrecision, true); mpfr_set_si(v_, static_cast<long>(x), MPFR_RNDN); }
  Real(unsigned x) { init(kMinPrecision, true); mpfr_set_ui(v_, x, MPFR_RNDN); }
  Real(unsigned long x) { init(kMinPrecision, true); mpfr_set_ui(v_, x, MPFR_RNDN); }
  Real(double x) { init(kMinPrecision, true); mpfr_set_d(v_, x, MPFR_RNDN); }

  // Fixed-precision constructors.
  Real(double x, Precision bits) { init(bits, false); mpfr_set_d(v_, x, MPFR_RNDN); }
  Real(long x, Precision bits) { init(bits, false); mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(int x, Precision bits) : Real(static_cast<long>(x), bits) {}
  Real(const mpz_class& x, Precision bits) { init(bits, false); mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN); }
  Real(const mpq_class& x, Precision bits) { init(bits, false); mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN); }
  Real(const std::string& decimal, Precision bits) {
    init(bits, false);
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
      mpfr_clear(v_);
      throw std::invalid_argument("not a decimal number: " + decimal);
    }
  }

  Real(const Real& o) { init(mpfr_get_prec(o.v_), o.literal_); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept {
    // Steal the limb storage; leave `o` as a valid zero-size literal.
    *v_ = *o.v_;
    literal_ = o.literal_;
    mpfr_init2(o.v_, MPFR_PREC_MIN);
    mpfr_set_zero(o.v_, 1);
    o.literal_ = true;
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
      literal_ = o.literal_;
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) {
      mpfr_swap(v_, o.v_);
      std::swap(literal_, o.literal_);
    }
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real pi(Precision bits) {
    Real r = raw(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  static Real e(Precision bits) {
    Real r = raw(bits);
    mpfr_set_ui(r.v_, 1, MPFR_RNDN);
    mpfr_exp(r.v_, r.v_, MPFR_RNDN);
    return r;
  }
  static Real infinity(int sign = 1) {
    Real r;
    mpfr_set_inf(r.v_, sign);
    return r;
  }
  // 2^e, exactly.
  static Real pow2(long e, Precision bits) {
    Real r = raw(bits);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }

  Precision bits() const { return mpfr_get_prec(v_); }
  bool is_literal() const { return literal_; }
  // Same value, rounded to `bits` and pinned to that precision.
  Real with_precision(Precision bits) const {
    Real r = raw(bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  mpz_class to_integer_floor() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
    return z;
  }
  mpz_class to_integer_ceil() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDU);
    return z;
  }
  // Binary exponent e with value = m * 2^e, 0.5 <= |m| < 1.
  long exponent() const { return is_zero() || !is_finite() ? 0 : mpfr_get_exp(v_); }

  // Decimal rendering with `digits` significant digits ("." separator,
  // independent of the C locale).
  std::string to_string(int digits = 0) const {
    if (is_nan()) return "nan";
    if (mpfr_inf_p(v_)) return sign() > 0 ? "inf" : "-inf";
    if (digits <= 0) digits = static_cast<int>(static_cast<double>(bits()) * 0.30103) + 1;
    mpfr_exp_t exp10 = 0;
    char* s = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    if (is_zero()) return "0";
    std::string out;
    if (mant[0] == '-') {
      out = "-";
      mant.erase(0, 1);
    }
    // mant = d1 d2 ... dn, value = 0.d1d2... * 10^exp10
    if (exp10 > 0 && exp10 <= 40) {
      auto e = static_cast<size_t>(exp10);
      if (mant.size() <= e) mant.append(e - mant.size() + 1, '0');
      out += mant.substr(0, e) + "." + mant.substr(e);
    } else if (exp10 <= 0 && exp10 > -8) {
      out += "0." + std::string(static_cast<size_t>(-exp10), '0') + mant;
    } else {
      out += mant.substr(0, 1) + "." + mant.substr(1) + "e" + std::to_string(exp10 - 1);
    }
    return out;
  }

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  Real& operator+=(const Real& o) { return *this = *this + o; }
  Real& operator-=(const Real& o) { return *this = *this - o; }
  Real& operator*=(const Real& o) { return *this = *this * o; }
  Real& operator/=(const Real& o) { return *this = *this / o; }

  friend Real operator+(const Real& a, const Real& b) { return binary(a, b, mpfr_add); }
  friend Real operator-(const Real& a, const Real& b) { return binary(a, b, mpfr_sub); }
  friend Real operator*(const Real& a, const Real& b) { return binary(a, b, mpfr_mul); }
  friend Real operator/(const Real& a, const Real& b) { return binary(a, b, mpfr_div); }
  friend Real operator-(const Real& a) {
    Real r = a;
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }

  friend std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.to_string(20); }

  // Uninitialised-value factory at a fixed precision.
  static Real raw(Precision bits) { return Real(RawTag{}, bits); }

 private:
  struct RawTag {};
  Real(RawTag, Precision bits) { init(bits, false); }

  void init(Precision bits, bool literal) {
    mpfr_init2(v_, std::max<Precision>(bits, MPFR_PREC_MIN));
    literal_ = literal;
  }

  static Precision combined(const Real& a, const Real& b) {
    if (a.literal_ && b.literal_) return std::max(a.bits(), b.bits());
    if (a.literal_) return b.bits();
    if (b.literal_) return a.bits();
    return std::min(a.bits(), b.bits());
  }

  template <class Op>
  static Real binary(const Real& a, const Real& b, Op op) {
    Real r = raw(combined(a, b));
    r.literal_ = a.literal_ && b.literal_;
    op(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
  bool literal_ = false;

  template <class F>
  friend Real unary_fn(const Real& x, F f);
};

template <class F>
inline Real unary_fn(const Real& x, F f) {
  Real r = Real::raw(x.bits());
  r.literal_ = x.literal_;
  f(r.v_, x.v_, MPFR_RNDN);
  return r;
}

inline Real abs(const Real& x) { return unary_fn(x, mpfr_abs); }
inline Real sqrt(const Real& x) { return unary_fn(x, mpfr_sqrt); }
inline Real exp(const Real& x) { return unary_fn(x, mpfr_exp); }
inline Real log(const Real& x) { return unary_fn(x, mpfr_log); }
inline Real log1p(const Real& x) { return unary_fn(x, mpfr_log1p); }
inline Real sin(const Real& x) { return unary_fn(x, mpfr_sin); }
inline Real cos(const Real& x) { return unary_fn(x, mpfr_cos); }
inline Real sinh(const Real& x) { return unary_fn(x, mpfr_sinh); }
inline Real cosh(const Real& x) { return unary_fn(x, mpfr_cosh); }
inline Real tanh(const Real& x) { return unary_fn(x, mpfr_tanh); }
inline Real floor(const Real& x) {
  Real r = Real::raw(x.bits());
  mpfr_floor(r.get(), x.get());
  return r;
}
inline Real ceil(const Real& x) {
  Real r = Real::raw(x.bits());
  mpfr_ceil(r.get(), x.get());
  return r;
}
inline Real lgamma(const Real& x) {
  Real r = Real::raw(x.bits());
  int sign = 0;
  mpfr_lgamma(r.get(), &sign, x.get(), MPFR_RNDN);
  return r;
}
inline Real atan2(const Real& y, const Real& x) {
  Real r = Real::raw(std::min(y.is_literal() ? x.bits() : y.bits(), x.is_literal() ? y.bits() : x.bits()));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}
inline Real hypot(const Real& x, const Real& y) {
  Real r = Real::raw(std::min(y.is_literal() ? x.bits() : y.bits(), x.is_literal() ? y.bits() : x.bits()));
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}
inline Real pow(const Real& x, const Real& y) {
  Real r = Real::raw(std::min(y.is_literal() ? x.bits() : y.bits(), x.is_literal() ? y.bits() : x.bits()));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}
inline Real pow(const Real& x, long n) {
  Real r = Real::raw(x.bits());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}
inline Real ldexp(const Real& x, long e) {
  Real r = Real::raw(x.bits());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}
inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }
inline Real min(const Real& a, const Real& b) { return b < a ? b : a; }

// log(n!) at the requested precision.
inline Real log_factorial(unsigned long n, Precision bits) {
  return lgamma(Real(static_cast<long>(n) + 1, bits));
}

}  // namespace lidstone
