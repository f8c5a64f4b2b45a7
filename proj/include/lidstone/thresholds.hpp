#pragma once

// Gap thresholds that classify a two-point frame.
//
//   nu               root of e^x - e^{-x} = 4x in [2, 3]     (2.17731...)
//   log(2 + sqrt 3)  root of e^x + e^{-x} = 4                (1.31695...)
//
// The nu relation is written with a minus sign: this is the relation whose
// root is 2.1773 and which keeps 4g - e^g + e^{-g} positive for g < nu.

#include <functional>
#include <map>
#include <mutex>

#include "lidstone/real.hpp"

namespace lidstone {

namespace detail {

// Bisection down to 2^-40 followed by Newton until the step stops shrinking.
inline Real bisect_newton(const std::function<Real(const Real&)>& f, const std::function<Real(const Real&)>& df,
                          Real lo, Real hi, Precision bits) {
  lo = lo.with_precision(bits);
  hi = hi.with_precision(bits);
  const int sign_lo = f(lo).sign();
  for (int i = 0; i < 40; ++i) {
    Real mid = ldexp(lo + hi, -1);
    if (f(mid).sign() == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  Real x = ldexp(lo + hi, -1);
  Real tol = Real::pow2(-static_cast<long>(bits) + 2, bits);
  for (int i = 0; i < 64; ++i) {
    Real step = f(x) / df(x);
    x = x - step;
    if (abs(step) <= tol * abs(x)) break;
  }
  return x;
}

template <class Compute>
const Real& cached_by_precision(std::map<Precision, Real>& cache, std::mutex& mutex, Precision bits,
                                Compute compute) {
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(bits);
    if (it != cache.end()) return it->second;
  }
  Real value = compute(bits);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(bits, std::move(value)).first->second;
}

}  // namespace detail

inline const Real& nu_value(Precision bits = kDefaultPrecision) {
  static std::map<Precision, Real> cache;
  static std::mutex mutex;
  return detail::cached_by_precision(cache, mutex, bits, [](Precision b) {
    return detail::bisect_newton([](const Real& x) { return ldexp(sinh(x), 1) - x * 4; },
                                 [](const Real& x) { return ldexp(cosh(x), 1) - 4; }, Real(2, b), Real(3, b), b);
  });
}

inline const Real& log_2_plus_sqrt3_value(Precision bits = kDefaultPrecision) {
  static std::map<Precision, Real> cache;
  static std::mutex mutex;
  return detail::cached_by_precision(cache, mutex, bits, [](Precision b) {
    return detail::bisect_newton([](const Real& x) { return ldexp(cosh(x), 1) - 4; },
                                 [](const Real& x) { return ldexp(sinh(x), 1); }, Real(1, b), Real(2, b), b);
  });
}

}  // namespace lidstone
