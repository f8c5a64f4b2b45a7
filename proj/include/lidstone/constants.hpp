#pragma once

// Critical constants, bound functions and Stirling-type utilities.
//
// Every constant is returned with its defining relation and the residual of
// that relation at the returned value.

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lidstone/exactpoly.hpp"
#include "lidstone/float_families.hpp"
#include "lidstone/thresholds.hpp"
#include "lidstone/twopoint.hpp"
#include "lidstone/zeros.hpp"

namespace lidstone {

struct RealConstant {
  std::string name;
  Real value;
  Precision bits = kDefaultPrecision;
  std::string relation;
  Real residual;

  // |relation(value)| < 2^{-bits+8}
  bool within_contract() const { return residual < Real::pow2(-static_cast<long>(bits) + 8, bits); }
};

inline void require_precision(Precision bits) {
  if (bits < kMinPrecision) {
    throw std::invalid_argument("precision must be at least " + std::to_string(kMinPrecision) + " bits");
  }
}

inline RealConstant nu(Precision bits = kDefaultPrecision) {
  require_precision(bits);
  const Real& x = nu_value(bits);
  return {"nu", x, bits, "e^x - e^-x - 4x = 0, x in [2, 3]", abs(ldexp(sinh(x), 1) - x * 4)};
}

// e^x + e^-x - 4x at the returned nu. This relation, read literally, has no
// root near 2.1773, so this quantity is far from zero; it is exposed for
// reporting only.
inline Real nu_literal_relation_residual(Precision bits = kDefaultPrecision) {
  const Real& x = nu_value(bits);
  return abs(ldexp(cosh(x), 1) - x * 4);
}

inline RealConstant log_2_plus_sqrt3(Precision bits = kDefaultPrecision) {
  require_precision(bits);
  const Real& x = log_2_plus_sqrt3_value(bits);
  return {"log_2_plus_sqrt3", x, bits, "e^x + e^-x - 4 = 0", abs(ldexp(cosh(x), 1) - 4)};
}

// 2 / (4 - e + e^-1) = 1 / (2 - sinh 1)
inline RealConstant gamma1(Precision bits = kDefaultPrecision) {
  require_precision(bits);
  const Real one(1, bits);
  const Real v = Real(2, bits) / (Real(4, bits) - exp(one) + exp(-one));
  return {"gamma1", v, bits, "x (2 - sinh 1) - 1 = 0", abs(v * (Real(2, bits) - sinh(one)) - 1)};
}

// 2 / (4 - e - e^-1) = 1 / (2 - cosh 1)
inline RealConstant gamma1_prime(Precision bits = kDefaultPrecision) {
  require_precision(bits);
  const Real one(1, bits);
  const Real v = Real(2, bits) / (Real(4, bits) - exp(one) - exp(-one));
  return {"gamma1_prime", v, bits, "x (2 - cosh 1) - 1 = 0", abs(v * (Real(2, bits) - cosh(one)) - 1)};
}

namespace detail {

// sup over |t| = radius of 1 / |e^t + sign e^-t|, by sampling a quarter
// circle (the function is symmetric under t -> -t and t -> conj t) and
// golden-section refinement around the best sample.
inline Real sup_inverse_exp_combination(const Real& radius, int sign, Precision bits) {
  auto value = [&](const Real& theta) {
    const Cx t = unit_root_angle(theta) * radius;
    const Cx e = exp(t);
    const Cx em = exp(-t);
    return Real(1, bits) / abs(sign > 0 ? e + em : e - em);
  };
  const int samples = 1024;
  const Real quarter = ldexp(Real::pi(bits), -1);
  Real best_theta(0, bits);
  Real best = value(best_theta);
  for (int k = 1; k <= samples; ++k) {
    const Real theta = quarter * k / samples;
    Real v = value(theta);
    if (v > best) {
      best = v;
      best_theta = theta;
    }
  }
  Real a = max(best_theta - quarter / samples, Real(0, bits));
  Real b = min(best_theta + quarter / samples, quarter);
  const Real phi = (sqrt(Real(5, bits)) - 1) / 2;
  for (int it = 0; it < 120; ++it) {
    const Real c = b - phi * (b - a);
    const Real d = a + phi * (b - a);
    if (value(c) > value(d)) {
      b = d;
    } else {
      a = c;
    }
  }
  return max(best, value(ldexp(a + b, -1)));
}

}  // namespace detail

// 2/pi + 2 sup_{|t| = 3pi/2} 1/|e^t - e^-t|: the bracket of the Lidstone
// circle-integral majorant at n = 0, with e^{-pi r/2} <= 1.
inline Real gamma3_surrogate(Precision bits = kDefaultPrecision) {
  static std::map<Precision, Real> cache;
  static std::mutex mutex;
  return detail::cached_by_precision(cache, mutex, bits, [](Precision b) {
    const Real pi = Real::pi(b);
    return Real(2, b) / pi + ldexp(detail::sup_inverse_exp_combination(pi * 3 / 2, -1, b), 1);
  });
}

// 4/pi + 2 sup_{|t| = pi} 1/|e^t + e^-t|, the Whittaker analogue.
inline Real gamma3_prime_surrogate(Precision bits = kDefaultPrecision) {
  static std::map<Precision, Real> cache;
  static std::mutex mutex;
  return detail::cached_by_precision(cache, mutex, bits, [](Precision b) {
    const Real pi = Real::pi(b);
    return Real(4, b) / pi + ldexp(detail::sup_inverse_exp_combination(pi, 1, b), 1);
  });
}

struct GammaFamily {
  Real gamma1, gamma1_prime, gamma3, gamma3_prime;
  std::optional<Real> gamma2, gamma2_prime, gamma4, gamma4_prime, gamma, gamma_prime;
  // one entry per absent value, naming the violated inequality
  std::vector<std::string> violations;
};

// gamma4 and gamma4' are set to 1.01 times their strict lower bounds
//   3 pi / (4 g (log pi - log g))   and   pi / (2 g (log pi - log 2g)).
template <class C>
GammaFamily gamma_family(const TwoPointFrame<C>& frame, Precision bits = kDefaultPrecision) {
  GammaFamily out;
  const Real g = frame.gap_modulus().with_precision(bits);
  const Real pi = Real::pi(bits);
  const Real factor = Real(101, bits) / 100;
  const Real sqrt_2pi = sqrt(ldexp(pi, 1));
  const Real s0_mod = FieldTraits<C>::modulus(frame.s0(), bits).with_precision(bits);
  out.gamma1 = gamma1(bits).value;
  out.gamma1_prime = gamma1_prime(bits).value;
  out.gamma3 = gamma3_surrogate(bits);
  out.gamma3_prime = gamma3_prime_surrogate(bits);

  const Real even_den = g * 4 - exp(g) + exp(-g);
  if (even_den > 0) {
    out.gamma2 = Real(2, bits) / even_den;
    out.gamma = exp(s0_mod) / sqrt_2pi * *out.gamma2;
  } else {
    out.violations.push_back("gamma2, gamma: need 4|s1-s0| - e^|s1-s0| + e^-|s1-s0| > 0, i.e. |s1-s0| < nu");
  }
  const Real oddeven_den = Real(4, bits) - exp(g) - exp(-g);
  if (oddeven_den > 0) {
    out.gamma2_prime = Real(2, bits) / oddeven_den;
    out.gamma_prime = exp(s0_mod) / sqrt_2pi * *out.gamma2_prime;
  } else {
    out.violations.push_back("gamma2', gamma': need e^|s1-s0| + e^-|s1-s0| < 4, i.e. |s1-s0| < log(2+sqrt 3)");
  }
  if (g < pi) {
    out.gamma4 = factor * 3 * pi / (g * 4 * (log(pi) - log(g)));
  } else {
    out.violations.push_back("gamma4: need |s1-s0| < pi");
  }
  if (ldexp(g, 1) < pi) {
    out.gamma4_prime = factor * pi / (ldexp(g, 1) * (log(pi) - log(ldexp(g, 1))));
  } else {
    out.violations.push_back("gamma4': need |s1-s0| < pi/2");
  }
  return out;
}

// --- tau_m ------------------------------------------------------------------

// F_m(t) = sum_{n>=0} t^{nm} / (nm)!, truncated for |t| <= radius with
// radius^{Tm} / (Tm)! < 2^{-bits-16}.
class PeriodicSeries {
 public:
  PeriodicSeries(unsigned m, const Real& radius, Precision bits) : m_(m) {
    if (m < 1) throw std::invalid_argument("periodic series needs m >= 1");
    const Real log_r = log(radius.with_precision(bits));
    const Real log_eps = (Real(-static_cast<long>(bits) - 16, bits)) * log(Real(2, bits));
    terms_ = 1;
    while (log_r * static_cast<long>(terms_ * m) - log_factorial(terms_ * m, bits) >= log_eps) ++terms_;
    for (unsigned n = 0; n <= terms_; ++n) {
      coeff_.push_back(Real(inverse_factorial(n * m), bits));
      if (n > 0) dcoeff_.push_back(Real(inverse_factorial(n * m - 1), bits));
    }
  }

  unsigned truncation() const { return terms_; }

  Cx value(const Cx& t, Precision bits) const {
    const Cx u = pow(with_precision(t, bits), m_);
    Cx acc;
    for (std::size_t n = coeff_.size(); n-- > 0;) acc = acc * u + Cx(coeff_[n]);
    return acc;
  }

  // sum_{n>=1} t^{nm-1} / (nm-1)!
  Cx derivative(const Cx& t, Precision bits) const {
    const Cx tt = with_precision(t, bits);
    const Cx u = pow(tt, m_);
    Cx acc;
    for (std::size_t n = dcoeff_.size(); n-- > 0;) acc = acc * u + Cx(dcoeff_[n]);
    return acc * pow(tt, m_ - 1);
  }

  AnalyticFunction as_function() const {
    return {[this](const Cx& t, Precision b) { return value(t, b); },
            [this](const Cx& t, Precision b) { return derivative(t, b); }};
  }

 private:
  unsigned m_;
  unsigned terms_ = 0;
  std::vector<Real> coeff_, dcoeff_;
};

struct TauResult {
  RealConstant constant;
  Cx zero;
  unsigned truncation;
};

inline TauResult tau_m_detailed(unsigned m, Precision bits = kDefaultPrecision) {
  require_precision(bits);
  if (m < 2) throw std::invalid_argument("tau_m needs m >= 2");
  static std::mutex mutex;
  static std::map<std::pair<unsigned, Precision>, TauResult> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({m, bits});
    if (it != cache.end()) return it->second;
  }
  // All zeros lie beyond pi/2 and tau_m grows roughly like m/e; the search
  // radius leaves ample room, and the zero finder refuses to go past it.
  const Real radius(std::max(8.0, static_cast<double>(m)), bits);
  const PeriodicSeries series(m, radius, bits + 32);
  ZeroSearchOptions opt;
  opt.max_doublings = static_cast<int>(std::ceil(std::log2(radius.to_double() / opt.rho0)));
  const ZeroResult z = smallest_zero(series.as_function(), bits + 32, opt);
  const Real modulus = z.modulus.with_precision(bits);
  TauResult result{{"tau_" + std::to_string(m), modulus, bits,
                    "smallest |t| with sum_n t^{" + std::to_string(m) + "n} / (" + std::to_string(m) + "n)! = 0",
                    abs(series.value(z.zero, bits))},
                   with_precision(z.zero, bits), series.truncation()};
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(std::make_pair(m, bits), result);
  return result;
}

inline RealConstant tau_m(unsigned m, Precision bits = kDefaultPrecision) { return tau_m_detailed(m, bits).constant; }

// --- Stirling-type utilities --------------------------------------------------

// (lower, upper) for  N^N e^-N sqrt(2 pi N) < N! < N^N e^-N sqrt(2 pi N) e^{1/(12N)}
inline std::pair<bool, bool> stirling_check(unsigned N, Precision bits = kDefaultPrecision) {
  if (N < 1) throw std::invalid_argument("stirling_check needs N >= 1");
  const Real n(static_cast<long>(N), bits);
  const Real log_fact = log(Real(factorial(N), bits));
  const Real base = n * log(n) - n + log(ldexp(Real::pi(bits), 1) * n) / 2;
  return {base < log_fact, log_fact < base + Real(1, bits) / (n * 12)};
}

// max over t in (0, r] of (r/t)(1 + log t) + (1/2) log t - r - 1/(4r); the
// inequality of the auxiliary Stirling lemma holds at r iff this is < 0.
// The maximum sits near t = 1 (at t_1 = 2 r log t_1), so the grid combines
// a dense linear window around 1 with a log-spaced sweep over (0, r].
inline double stirling_lemma_margin(double r) {
  auto f = [r](double t) { return (r / t) * (1 + std::log(t)) + 0.5 * std::log(t) - r - 1 / (4 * r); };
  double worst = -INFINITY;
  const int sweep = 4000;
  const double lo = std::log(1e-9 * std::min(r, 1.0));
  for (int k = 0; k <= sweep; ++k) {
    const double t = std::exp(lo + (std::log(r) - lo) * k / sweep);
    worst = std::max(worst, f(t));
  }
  for (int k = 0; k <= 4000; ++k) {
    const double t = 0.5 + 2.5 * k / 4000.0;
    if (t <= r) worst = std::max(worst, f(t));
  }
  // the interior critical point t = 2 r log t, found by fixed-point iteration
  if (r > 0.5) {
    double t = 1 + 1 / (2 * r);
    for (int i = 0; i < 200; ++i) t = std::exp(t / (2 * r));
    if (std::isfinite(t) && t > 0 && t <= r) worst = std::max(worst, f(t));
  }
  return worst;
}

// Smallest r on the grid 0.25, 0.5, ... from which the lemma inequality
// holds for 64 consecutive grid steps.
inline double stirling_lemma_r0() {
  static const double value = [] {
    const double step = 0.25;
    int run = 0;
    double start = step;
    for (int k = 1; k < 100000; ++k) {
      const double r = step * k;
      if (stirling_lemma_margin(r) < 0) {
        if (run == 0) start = r;
        if (++run == 64) return start;
      } else {
        run = 0;
      }
    }
    throw std::runtime_error("no threshold found for the Stirling lemma");
  }();
  return value;
}

// r^N / N! <= e^{r + 1/(4r)} / sqrt(2 pi r), checked in the log domain.
inline bool stirling_corollary_check(const Real& r, unsigned N, Precision bits = kDefaultPrecision) {
  if (r.to_double() < stirling_lemma_r0()) {
    throw std::invalid_argument("stirling_corollary_check needs r >= r0 = " + std::to_string(stirling_lemma_r0()));
  }
  const Real rr = r.with_precision(bits);
  const Real lhs = log(rr) * static_cast<long>(N) - log_factorial(N, bits);
  const Real rhs = rr + Real(1, bits) / (rr * 4) - log(ldexp(Real::pi(bits), 1) * rr) / 2;
  return lhs <= rhs;
}

// --- sup-norm bounds for the scaled families ----------------------------------

enum class BoundKind { i, ii, iii };

inline BoundKind bound_kind_from_string(const std::string& s) {
  if (s == "i") return BoundKind::i;
  if (s == "ii") return BoundKind::ii;
  if (s == "iii") return BoundKind::iii;
  throw std::invalid_argument("unknown bound '" + s + "' (expected i, ii or iii)");
}

struct BoundOptions {
  // Bound (ii) holds "for r sufficiently large"; requests below this
  // threshold are rejected. Defaults to the Stirling lemma r0.
  std::optional<double> large_r_threshold;
};

// log of the named upper bound for |Ls_n|_r.
template <class C>
Real lidstone_sup_bound(const TwoPointFrame<C>& frame, unsigned n, const Real& r, BoundKind which,
                        const BoundOptions& opt = {}, Precision bits = kDefaultPrecision) {
  const Real g = frame.gap_modulus().with_precision(bits);
  const Real rr = r.with_precision(bits);
  const long two_n = 2 * static_cast<long>(n);
  switch (which) {
    case BoundKind::i: {
      const Real m = max(rr / g, Real(two_n + 1, bits));
      return log(gamma1(bits).value) + log(g) * two_n - log_factorial(two_n + 1, bits) + log(m) * (two_n + 1);
    }
    case BoundKind::ii: {
      if (!frame.even_regime()) throw std::invalid_argument("bound (ii) needs |s1-s0| < nu");
      const double threshold = opt.large_r_threshold.value_or(stirling_lemma_r0());
      if (rr.to_double() < threshold) {
        throw std::invalid_argument("bound (ii) needs r >= " + std::to_string(threshold));
      }
      const Real gamma2 = Real(2, bits) / (g * 4 - exp(g) + exp(-g));
      return log(gamma2) + rr + Real(1, bits) / (rr * 4) - log(ldexp(Real::pi(bits), 1) * rr) / 2;
    }
    case BoundKind::iii: {
      const Real pi = Real::pi(bits);
      return log(gamma3_surrogate(bits)) + log(g / pi) * two_n + pi * 3 * rr / (ldexp(g, 1));
    }
  }
  throw std::logic_error("unreachable");
}

// log of the named upper bound for |Ms_n|_r.
template <class C>
Real whittaker_sup_bound(const TwoPointFrame<C>& frame, unsigned n, const Real& r, BoundKind which,
                         const BoundOptions& opt = {}, Precision bits = kDefaultPrecision) {
  const Real g = frame.gap_modulus().with_precision(bits);
  const Real rr = r.with_precision(bits);
  const long two_n = 2 * static_cast<long>(n);
  switch (which) {
    case BoundKind::i: {
      Real out = log(gamma1_prime(bits).value) + log(g) * two_n - log_factorial(two_n, bits);
      // max{r/g, 2n}^{2n}, with 0^0 = 1
      if (n > 0) out = out + log(max(rr / g, Real(two_n, bits))) * two_n;
      return out;
    }
    case BoundKind::ii: {
      if (!frame.oddeven_regime()) throw std::invalid_argument("bound (ii) needs |s1-s0| < log(2+sqrt 3)");
      const double threshold = opt.large_r_threshold.value_or(stirling_lemma_r0());
      if (rr.to_double() < threshold) {
        throw std::invalid_argument("bound (ii) needs r >= " + std::to_string(threshold));
      }
      const Real gamma2 = Real(2, bits) / (Real(4, bits) - exp(g) - exp(-g));
      return log(gamma2) + rr + Real(1, bits) / (rr * 4) - log(ldexp(Real::pi(bits), 1) * rr) / 2;
    }
    case BoundKind::iii: {
      const Real pi = Real::pi(bits);
      return log(gamma3_prime_surrogate(bits)) + log(ldexp(g, 1) / pi) * two_n + pi * rr / g;
    }
  }
  throw std::logic_error("unreachable");
}

struct TailSum {
  unsigned first_index;  // ceil(gamma4 r)
  double value;          // sum of |Ls_n|_r over n >= first_index
  double remainder_bound;  // geometric bound on the part beyond the summed terms
};

// sum_{n >= ceil(c r)} |Ls_n|_r with exact sup norms (attained on the
// imaginary axis), summed until the terms fall below 2^-64 of the running
// total, plus the closed-form bound (iii) for what is left.
inline TailSum tail_sum(bool lidstone, double gap_modulus, double r, double c) {
  TailSum out{static_cast<unsigned>(std::ceil(c * r)), 0.0, 0.0};
  const long double g = gap_modulus;
  const long double ratio_base = lidstone ? g / M_PIl : 2 * g / M_PIl;
  long double sum = 0;
  unsigned n = out.first_index;
  for (;; ++n) {
    const long double term = std::exp(lidstone ? log_sup_scaled_lidstone_ld(n, g, r) : log_sup_scaled_whittaker_ld(n, g, r));
    sum += term;
    if (n > out.first_index + 8 && term < sum * 5.4e-20L) break;
    if (n > out.first_index + 4000) break;
  }
  out.value = static_cast<double>(sum);
  const long double ratio = ratio_base * ratio_base;
  const long double gamma3 = (lidstone ? gamma3_surrogate(64) : gamma3_prime_surrogate(64)).to_long_double();
  const long double expo = lidstone ? 3 * M_PIl * r / (2 * g) : M_PIl * r / g;
  out.remainder_bound =
      static_cast<double>(gamma3 * std::exp(expo + (n + 1) * std::log(ratio)) / (1 - ratio));
  return out;
}

}  // namespace lidstone
