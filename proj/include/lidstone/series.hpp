#pragma once

// Entire functions given by explicit formulas: evaluation, closed-form
// derivatives, sup norms on circles and growth reports, plus the identities
// satisfied by the Lidstone and Whittaker families.
//
// Arbitrary-precision polynomial values use the scalar tables
//   lambda_n = L_n'(0),  mu_n = M_n(0)
// (see float_families.hpp), so L_n(z) = sum_j lambda_{n-j} z^{2j+1}/(2j+1)!
// and M_n(z) = sum_j mu_{n-j} z^{2j}/(2j)! cost O(n) per point once the
// table is built. Scaling by the frame gap g gives
//   Ls_n(w) = sum_j lambda_{n-j} g^{2n-2j-1} w^{2j+1}/(2j+1)!
//   Ms_n(w) = sum_j mu_{n-j}     g^{2n-2j}   w^{2j}/(2j)!.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lidstone/constants.hpp"
#include "lidstone/expsum.hpp"
#include "lidstone/parallel.hpp"
#include "lidstone/twopoint.hpp"

namespace lidstone {

enum class Family { lidstone, whittaker };

inline std::string to_string(Family f) { return f == Family::lidstone ? "lidstone" : "whittaker"; }

inline Family family_from_string(const std::string& s) {
  if (s == "lidstone") return Family::lidstone;
  if (s == "whittaker") return Family::whittaker;
  throw std::invalid_argument("unknown family '" + s + "' (expected lidstone or whittaker)");
}

namespace detail {

// lambda_0..lambda_n (Lidstone) or mu_0..mu_n (Whittaker) at `bits`.
inline std::vector<Real> boundary_values(Family family, unsigned n, Precision bits) {
  static std::mutex mutex;
  static std::map<std::pair<int, Precision>, std::vector<Real>> cache;
  const unsigned offset = family == Family::lidstone ? 1 : 0;
  std::lock_guard<std::mutex> lock(mutex);
  auto& t = cache[{static_cast<int>(offset), bits}];
  if (t.empty()) t.push_back(Real(1, bits));
  while (t.size() <= n) {
    const std::size_t m = t.size();
    Real acc(0, bits);
    for (std::size_t j = 1; j <= m; ++j) {
      acc = acc - t[m - j] * Real(inverse_factorial(static_cast<unsigned>(2 * j + offset)), bits);
    }
    t.push_back(acc);
  }
  return std::vector<Real>(t.begin(), t.begin() + n + 1);
}

// Coefficients (ascending) of the delta-th derivative of the scaled family
// member M, delta in {0, 1}.
inline std::vector<Cx> scaled_family_coefficients(Family family, unsigned M, unsigned delta, const Cx& g,
                                                  Precision bits) {
  const std::vector<Real> b = boundary_values(family, M, bits);
  // gp[e + 1] = g^e for e = -1 .. 2M
  std::vector<Cx> gp(2 * static_cast<std::size_t>(M) + 2);
  gp[1] = Cx(Real(1, bits));
  gp[0] = gp[1] / g;
  for (std::size_t e = 2; e < gp.size(); ++e) gp[e] = gp[e - 1] * g;
  std::vector<Cx> out;
  if (family == Family::lidstone) {
    out.assign(2 * static_cast<std::size_t>(M) + 2, Cx(Real(0, bits)));
    for (unsigned j = 0; j <= M; ++j) {
      const Cx c = gp[2 * (M - j)] * b[M - j];  // g^{2M-2j-1}
      if (delta == 0) {
        out[2 * j + 1] = c * Real(inverse_factorial(2 * j + 1), bits);
      } else {
        out[2 * j] = c * Real(inverse_factorial(2 * j), bits);
      }
    }
  } else {
    out.assign(2 * static_cast<std::size_t>(M) + 1, Cx(Real(0, bits)));
    for (unsigned j = 0; j <= M; ++j) {
      const Cx c = gp[2 * (M - j) + 1] * b[M - j];  // g^{2M-2j}
      if (delta == 0) {
        out[2 * j] = c * Real(inverse_factorial(2 * j), bits);
      } else if (j > 0) {
        out[2 * j - 1] = c * Real(inverse_factorial(2 * j - 1), bits);
      }
    }
  }
  return out;
}

inline Cx horner(const std::vector<Cx>& c, const Cx& z) {
  Cx acc(Real(0, precision_of(z)));
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc;
}

inline void require_samples(unsigned samples) {
  if (samples < 64) throw std::invalid_argument("sup norm needs at least 64 samples");
}

}  // namespace detail

// L_n(z) and M_n(z) at `bits` from the scalar tables.
inline Cx lidstone_value(unsigned n, const Cx& z, Precision bits) {
  const Precision wb = bits + 32;
  const Cx one(Real(1, wb));
  const Cx v = detail::horner(detail::scaled_family_coefficients(Family::lidstone, n, 0, one, wb), with_precision(z, wb));
  return with_precision(v, bits);
}

inline Cx whittaker_value(unsigned n, const Cx& z, Precision bits) {
  const Precision wb = bits + 32;
  const Cx one(Real(1, wb));
  const Cx v = detail::horner(detail::scaled_family_coefficients(Family::whittaker, n, 0, one, wb), with_precision(z, wb));
  return with_precision(v, bits);
}

// --- lacunary two-point series ------------------------------------------------

// f(z) = sum_k signs[k] * F_{N_k}(z - s0), F the scaled Lidstone or
// Whittaker family, with N_0 = 1 and N_{k+1} = ceil(gamma4 N_k^2).
struct LacunarySeries {
  ExactFrame frame;
  Family family;
  std::vector<unsigned long long> support;
  std::vector<int> signs;
  Real gamma4;

  // e_n: the even jet at s1 of order 2n
  int coefficient(unsigned long long n) const {
    for (std::size_t k = 0; k < support.size(); ++k) {
      if (support[k] == n) return signs[k];
    }
    return 0;
  }
};

inline LacunarySeries build_lacunary(const ExactFrame& frame, Family family, std::vector<int> signs, unsigned K,
                                     Precision bits = kDefaultPrecision) {
  require_precision(bits);
  if (signs.size() != static_cast<std::size_t>(K) + 1) {
    throw std::invalid_argument("lacunary series needs K+1 = " + std::to_string(K + 1) + " signs, got " +
                                std::to_string(signs.size()));
  }
  for (int s : signs) {
    if (s != 1 && s != -1) throw std::invalid_argument("lacunary signs must be +1 or -1");
  }
  const GammaFamily gf = gamma_family(frame, bits);
  const Real g = frame.gap_modulus().with_precision(bits);
  const Real pi = Real::pi(bits);
  Real gamma4;
  if (family == Family::lidstone) {
    if (!gf.gamma4) throw std::invalid_argument("lacunary Lidstone series needs |s1-s0| < pi");
    if (pi - g < Real::pow2(-20, bits)) {
      throw std::invalid_argument("lacunary Lidstone series needs |s1-s0| < pi - 2^-20 (the case |s1-s0| = pi is open)");
    }
    gamma4 = *gf.gamma4;
  } else {
    if (!gf.gamma4_prime) throw std::invalid_argument("lacunary Whittaker series needs |s1-s0| < pi/2");
    gamma4 = *gf.gamma4_prime;
  }
  std::vector<unsigned long long> support{1};
  const Real limit = Real::pow2(62, bits);
  for (unsigned k = 0; k < K; ++k) {
    const Real n = Real(static_cast<long>(support.back()), bits);
    const Real next = ceil(gamma4 * n * n);
    if (next > limit) throw std::invalid_argument("lacunary support overflows 64-bit indices at K = " + std::to_string(k + 1));
    support.push_back(static_cast<unsigned long long>(next.to_integer_floor().get_ui()));
  }
  return {frame, family, std::move(support), std::move(signs), gamma4};
}

// Support index of the term of the order-d derivative that is shifted down
// to family member N - floor(d/2); terms with that member index above
// gamma4 (|z| + |s0|) + 8 are dropped (their sup is below the tail bound).
inline bool lacunary_term_included(const LacunarySeries& s, unsigned long long N, unsigned order, const Real& radius) {
  const unsigned long long half = order / 2;
  if (half > N) return false;
  const Precision bits = s.gamma4.bits();
  const Real s0 = FieldTraits<GaussianRational>::modulus(s.frame.s0(), bits);
  return Real(static_cast<long>(N - half), bits) <= s.gamma4 * (radius.with_precision(bits) + s0) + 8;
}

// log of the summed sup bounds over the supports that lacunary_term_included
// drops at this radius (-inf if none are dropped).
inline Real lacunary_dropped_log_bound(const LacunarySeries& s, unsigned order, const Real& radius, Precision bits) {
  Real total(0, bits);
  bool any = false;
  const Real s0 = FieldTraits<GaussianRational>::modulus(s.frame.s0(), bits);
  // odd orders: Cauchy's estimate |p'|_R <= |p|_{R+1}
  const Real R = radius.with_precision(bits) + s0 + static_cast<long>(order % 2);
  for (unsigned long long N : s.support) {
    if (order / 2 > N || lacunary_term_included(s, N, order, radius)) continue;
    const auto M = static_cast<unsigned>(N - order / 2);
    // the smaller of bounds (i) and (iii) on the shifted member
    const bool lid = s.family == Family::lidstone;
    const Real lb = lid ? min(lidstone_sup_bound(s.frame, M, R, BoundKind::i, {}, bits),
                              lidstone_sup_bound(s.frame, M, R, BoundKind::iii, {}, bits))
                        : min(whittaker_sup_bound(s.frame, M, R, BoundKind::i, {}, bits),
                              whittaker_sup_bound(s.frame, M, R, BoundKind::iii, {}, bits));
    total = total + exp(lb);
    any = true;
  }
  return any ? log(total) : Real::infinity(-1);
}

// Exact jet f^{(order)} at s0 (point 0) or s1 (point 1). Members up to
// `exact_limit` are evaluated from the exact polynomials; larger members
// use the delta identities, which only determine the even jets at both
// points for Lidstone and the odd jets at s0 / even jets at s1 for
// Whittaker.
inline GaussianRational lacunary_jet_exact(const LacunarySeries& s, int point, unsigned order,
                                           unsigned exact_limit = 64) {
  if (point != 0 && point != 1) throw std::invalid_argument("jet point must be 0 (s0) or 1 (s1)");
  GaussianRational acc(Rational(0));
  const unsigned delta = order % 2;
  for (std::size_t k = 0; k < s.support.size(); ++k) {
    const unsigned long long N = s.support[k];
    if (order / 2 > N) continue;
    const unsigned long long M = N - order / 2;
    GaussianRational v(Rational(0));
    if (M <= exact_limit) {
      const auto m = static_cast<unsigned>(M);
      ComplexPoly<GaussianRational> p =
          s.family == Family::lidstone ? scaled_lidstone(s.frame, m) : scaled_whittaker(s.frame, m);
      if (delta) p = p.derivative(1);
      v = p(point == 0 ? GaussianRational(Rational(0)) : s.frame.gap());
    } else {
      const bool determined = s.family == Family::lidstone ? delta == 0 : (point == 0) == (delta == 1);
      if (!determined) {
        throw std::domain_error("jet of order " + std::to_string(order) + " at s" + std::to_string(point) +
                                " is not fixed by the delta identities");
      }
      // members M >= 1 have every determined jet equal to zero
    }
    acc += GaussianRational(Rational(s.signs[k])) * v;
  }
  return acc;
}

// --- Polya lacunary Taylor series -------------------------------------------

// f^{(d)}(z) for f = sum_{n>=0} e_n z^{2^n}/(2^n)!, signs cycled. Terms are
// summed until past the peak (2^n > |z|) and below 2^{-bits-16} of the
// largest term seen.
inline Cx polya_eval(const std::vector<int>& signs, unsigned d, const Cx& z, Precision bits) {
  if (signs.empty()) throw std::invalid_argument("Polya series needs at least one sign");
  const Precision wb = bits + 32;
  const Cx zz = with_precision(z, wb);
  Cx acc(Real(0, wb));
  if (is_zero(zz)) {
    for (unsigned n = 0; n < 63; ++n) {
      if ((1ULL << n) == d) acc = Cx(Real(signs[n % signs.size()], wb));
    }
    return with_precision(acc, bits);
  }
  const Real absz = abs(zz);
  const Cx lz = log(zz);
  const Real cutoff = Real(-static_cast<long>(bits) - 16, wb) * log(Real(2, wb));
  Real running = Real::infinity(-1);
  for (unsigned n = 0; n < 62; ++n) {
    const unsigned long long P = 1ULL << n;
    if (P < d) continue;
    const unsigned long long M = P - d;
    const Real lf = log_factorial(M, wb);
    const Real mm(static_cast<long>(M), wb);
    const Real log_mag = lz.re * mm - lf;
    running = max(running, log_mag);
    acc += Cx(Real(signs[n % signs.size()], wb)) * exp(Cx(log_mag, lz.im * mm));
    if (Real(static_cast<long>(P), wb) > absz && log_mag < running + cutoff) break;
  }
  return with_precision(acc, bits);
}

inline Cx polya_example(const std::vector<int>& signs, const Cx& z, Precision bits = kDefaultPrecision) {
  return polya_eval(signs, 0, z, bits);
}

// log of c sqrt(2 pi) e^{1/(12n)} (1 - A/n)^{-n}: Cauchy's inequality on the
// circle of radius n - A about a point with |z| <= A, followed by Stirling's
// upper bound for n!. +inf for n <= A.
inline double polya_chain_log_bound(double A, double c, unsigned long n) {
  const double nn = static_cast<double>(n);
  if (nn <= A) return std::numeric_limits<double>::infinity();
  return std::log(c) + 0.5 * std::log(2 * M_PI) + 1.0 / (12 * nn) - nn * std::log1p(-A / nn);
}

// Least n0 with the chain bound below 1 for n0 and the 50 indices after it.
inline unsigned long polya_n0(double A, double c) {
  if (!(A >= 0)) throw std::invalid_argument("polya_n0 needs A >= 0");
  if (!(c > 0)) throw std::invalid_argument("polya_n0 needs c > 0");
  if (!(c < std::exp(-A) / std::sqrt(2 * M_PI))) throw std::invalid_argument("polya_n0 needs c < e^-A / sqrt(2 pi)");
  constexpr unsigned long cap = 100000000UL;
  for (unsigned long n = 1; n < cap; ++n) {
    if (polya_chain_log_bound(A, c, n) >= 0) continue;
    unsigned long bad = 0;
    for (unsigned long m = n + 1; m <= n + 50; ++m) {
      if (polya_chain_log_bound(A, c, m) >= 0) bad = m;
    }
    if (bad == 0) return n;
    n = bad;
  }
  throw std::runtime_error("polya_n0: no n0 below " + std::to_string(cap));
}

// log(n!) - n log r + log_sup: Cauchy's upper bound for log|f^{(n)}(z0)|
// given log_sup = log |f|_{r + |z0|}.
inline Real cauchy_derivative_bound(const Real& log_sup, unsigned long n, const Real& r) {
  if (!(r > 0)) throw std::invalid_argument("Cauchy bound needs r > 0");
  const Precision bits = std::max(log_sup.bits(), r.bits());
  return log_factorial(n, bits) - log(r.with_precision(bits)) * static_cast<long>(n) + log_sup;
}

// --- entire function handle ---------------------------------------------------

class EntireFunction {
 public:
  using Closure = std::function<Cx(const Cx&, Precision)>;
  using DerivativeFactory = std::function<EntireFunction(unsigned)>;
  enum class Kind { polynomial, exponential_sum, lacunary, polya, closure };

  static EntireFunction polynomial(ComplexPoly<Cx> p, std::string description = "polynomial") {
    return EntireFunction(std::move(p), std::move(description));
  }
  static EntireFunction exponential_sum(ExponentialSum s, std::string description = "exponential sum") {
    return EntireFunction(std::move(s), std::move(description));
  }
  static EntireFunction lacunary(LacunarySeries s, std::string description = "") {
    if (description.empty()) description = "lacunary " + to_string(s.family) + " K=" + std::to_string(s.support.size() - 1);
    return EntireFunction(Lacunary{std::make_shared<const LacunarySeries>(std::move(s)), 0}, std::move(description));
  }
  static EntireFunction polya(std::vector<int> signs, std::string description = "polya") {
    if (signs.empty()) throw std::invalid_argument("Polya series needs at least one sign");
    for (int s : signs) {
      if (s != 1 && s != -1) throw std::invalid_argument("Polya signs must be +1 or -1");
    }
    return EntireFunction(Polya{std::make_shared<const std::vector<int>>(std::move(signs)), 0}, std::move(description));
  }
  // `derivative` may be empty, in which case derivative() throws.
  static EntireFunction closure(Closure value, DerivativeFactory derivative, std::string description = "closure") {
    return EntireFunction(ClosureData{std::move(value), std::move(derivative), 0}, std::move(description));
  }

  Kind kind() const { return static_cast<Kind>(data_.index()); }
  const std::string& description() const { return description_; }

  EntireFunction derivative(unsigned k = 1) const {
    if (k == 0) return *this;
    const std::string desc = description_ + " d^" + std::to_string(k);
    return std::visit(
        [&](const auto& d) -> EntireFunction {
          using T = std::decay_t<decltype(d)>;
          if constexpr (std::is_same_v<T, ComplexPoly<Cx>>) {
            return EntireFunction(d.derivative(k), desc);
          } else if constexpr (std::is_same_v<T, ExponentialSum>) {
            return EntireFunction(d.derivative(k), desc);
          } else if constexpr (std::is_same_v<T, Lacunary>) {
            return EntireFunction(Lacunary{d.series, d.order + k}, desc);
          } else if constexpr (std::is_same_v<T, Polya>) {
            return EntireFunction(Polya{d.signs, d.order + k}, desc);
          } else {
            if (!d.derivative) throw std::logic_error("closure '" + description_ + "' has no closed-form derivative");
            return d.derivative(d.order + k);
          }
        },
        data_);
  }

  // Evaluator prepared for |z| <= radius at `bits`. Lacunary series are
  // collapsed into one polynomial in z - s0 over the supports that matter
  // at this radius.
  std::function<Cx(const Cx&)> evaluator(const Real& radius, Precision bits) const {
    const Precision wb = bits + 32;
    return std::visit(
        [&](const auto& d) -> std::function<Cx(const Cx&)> {
          using T = std::decay_t<decltype(d)>;
          if constexpr (std::is_same_v<T, ComplexPoly<Cx>>) {
            std::vector<Cx> c;
            for (int i = 0; i <= d.degree(); ++i) c.push_back(with_precision(d.coefficient(i), wb));
            return [c, bits, wb](const Cx& z) { return with_precision(detail::horner(c, with_precision(z, wb)), bits); };
          } else if constexpr (std::is_same_v<T, ExponentialSum>) {
            std::vector<ExpTerm> t;
            for (const auto& term : d.terms()) t.push_back({with_precision(term.c, wb), with_precision(term.lambda, wb)});
            return [t, bits, wb](const Cx& z) {
              const Cx zz = with_precision(z, wb);
              Cx acc(Real(0, wb));
              for (const auto& term : t) acc += term.c * exp(term.lambda * zz);
              return with_precision(acc, bits);
            };
          } else if constexpr (std::is_same_v<T, Lacunary>) {
            const LacunarySeries& s = *d.series;
            const Cx g = to_cx(s.frame.gap(), wb);
            const Cx s0 = to_cx(s.frame.s0(), wb);
            std::vector<Cx> c;
            for (std::size_t k = 0; k < s.support.size(); ++k) {
              const unsigned long long N = s.support[k];
              if (!lacunary_term_included(s, N, d.order, radius)) continue;
              const auto M = static_cast<unsigned>(N - d.order / 2);
              const auto part = detail::scaled_family_coefficients(s.family, M, d.order % 2, g, wb);
              if (c.size() < part.size()) c.resize(part.size(), Cx(Real(0, wb)));
              for (std::size_t i = 0; i < part.size(); ++i) {
                c[i] = s.signs[k] > 0 ? c[i] + part[i] : c[i] - part[i];
              }
            }
            return [c, s0, bits, wb](const Cx& z) {
              return with_precision(detail::horner(c, with_precision(z, wb) - s0), bits);
            };
          } else if constexpr (std::is_same_v<T, Polya>) {
            auto signs = d.signs;
            const unsigned order = d.order;
            return [signs, order, bits](const Cx& z) { return polya_eval(*signs, order, z, bits); };
          } else {
            auto v = d.value;
            return [v, bits](const Cx& z) { return v(z, bits); };
          }
        },
        data_);
  }

  Cx operator()(const Cx& z, Precision bits) const { return evaluator(abs(z), bits)(z); }

  const LacunarySeries* lacunary_series() const {
    const auto* l = std::get_if<Lacunary>(&data_);
    return l ? l->series.get() : nullptr;
  }
  const ExponentialSum* exponential_sum_terms() const { return std::get_if<ExponentialSum>(&data_); }
  const ComplexPoly<Cx>* polynomial_coefficients() const { return std::get_if<ComplexPoly<Cx>>(&data_); }

 private:
  struct Lacunary {
    std::shared_ptr<const LacunarySeries> series;
    unsigned order;
  };
  struct Polya {
    std::shared_ptr<const std::vector<int>> signs;
    unsigned order;
  };
  struct ClosureData {
    Closure value;
    DerivativeFactory derivative;
    unsigned order;  // derivatives of order k come from derivative(order + k)
  };
  using Data = std::variant<ComplexPoly<Cx>, ExponentialSum, Lacunary, Polya, ClosureData>;

  template <class T>
  EntireFunction(T data, std::string description) : data_(std::move(data)), description_(std::move(description)) {}

  Data data_;
  std::string description_;
};

// --- eigenfunctions and trigonometric families --------------------------------

namespace detail {

inline Precision common_precision(std::initializer_list<const Cx*> zs) {
  Precision p = kMinPrecision;
  for (const Cx* z : zs) p = std::max(p, precision_of(*z));
  return p;
}

}  // namespace detail

// a0 sinh(z - s1)/sinh(s0 - s1) + a1 sinh(z - s0)/sinh(s1 - s0): every even
// jet equals a0 at s0 and a1 at s1.
inline ExponentialSum sinh_eigenfunction(const Cx& s0, const Cx& s1, const Cx& a0, const Cx& a1) {
  const Precision bits = detail::common_precision({&s0, &s1, &a0, &a1});
  const Cx d = sinh(with_precision(s0 - s1, bits));
  if (abs(d) < Real::pow2(-static_cast<long>(bits) / 2, bits)) {
    throw std::invalid_argument("sinh eigenfunction needs sinh(s0 - s1) != 0");
  }
  const Cx half(Real(0.5, bits));
  // sinh(z - s) = (e^{-s} e^z - e^{s} e^{-z}) / 2
  const Cx plus = half * (a0 * exp(-s1) / d - a1 * exp(-s0) / d);
  const Cx minus = half * (a1 * exp(s0) / d - a0 * exp(s1) / d);
  const Cx one(Real(1, bits));
  return ExponentialSum({{plus, one}, {minus, -one}});
}

// a0 sinh(z - s1)/cosh(s0 - s1) + a1 cosh(z - s0)/cosh(s1 - s0): every odd
// jet at s0 equals a0 and every even jet at s1 equals a1.
inline ExponentialSum cosh_eigenfunction(const Cx& s0, const Cx& s1, const Cx& a0, const Cx& a1) {
  const Precision bits = detail::common_precision({&s0, &s1, &a0, &a1});
  const Cx d = cosh(with_precision(s0 - s1, bits));
  if (abs(d) < Real::pow2(-static_cast<long>(bits) / 2, bits)) {
    throw std::invalid_argument("cosh eigenfunction needs cosh(s0 - s1) != 0");
  }
  const Cx half(Real(0.5, bits));
  const Cx plus = half * (a0 * exp(-s1) + a1 * exp(-s0)) / d;
  const Cx minus = half * (a1 * exp(s0) - a0 * exp(s1)) / d;
  const Cx one(Real(1, bits));
  return ExponentialSum({{plus, one}, {minus, -one}});
}

// sin(l pi (z - s0)/(s1 - s0)): all even jets vanish at s0 and s1; type
// l pi / |s1 - s0|.
inline ExponentialSum sine_family(const Cx& s0, const Cx& s1, unsigned l) {
  const Precision bits = detail::common_precision({&s0, &s1});
  const Cx i(Real(0, bits), Real(1, bits));
  const Cx w = i * Cx(Real::pi(bits) * static_cast<long>(l)) / (s1 - s0);
  const Cx two_i = i * Cx(Real(2, bits));
  return ExponentialSum({{exp(-w * s0) / two_i, w}, {-(exp(w * s0) / two_i), -w}});
}

// cos((2l+1) pi/2 (z - s0)/(s1 - s0)): odd jets at s0 and even jets at s1
// vanish; type (2l+1) pi / (2 |s1 - s0|).
inline ExponentialSum cosine_family(const Cx& s0, const Cx& s1, unsigned l) {
  const Precision bits = detail::common_precision({&s0, &s1});
  const Cx i(Real(0, bits), Real(1, bits));
  const Cx w = i * Cx(ldexp(Real::pi(bits) * static_cast<long>(2 * l + 1), -1)) / (s1 - s0);
  const Cx half(Real(0.5, bits));
  return ExponentialSum({{half * exp(-w * s0), w}, {half * exp(w * s0), -w}});
}

// --- sup norms and growth ----------------------------------------------------

struct SupNorm {
  Real log_sup;       // log of the largest |f| found (-inf if f vanishes on every sample)
  Real theta;         // argument of the maximiser
  unsigned samples;   // equispaced samples in the last pass
  bool converged;     // last doubling changed log_sup by less than 2^{-bits/4}
};

// Largest |f| on |z| = r. A pass samples `samples` equispaced points, then
// refines the four largest local maxima by golden-section search between
// their neighbours. Passes double the sample count (at most three times)
// until log_sup moves by less than 2^{-bits/4}. The result is a lower bound
// on the true sup. With refine = false this is a single unrefined pass.
inline SupNorm sup_norm_detailed(const EntireFunction& f, const Real& r, unsigned samples,
                                 Precision bits = kDefaultPrecision, bool refine = true) {
  require_precision(bits);
  detail::require_samples(samples);
  if (!(r > 0)) throw std::invalid_argument("sup norm needs r > 0");
  const Real R = r.with_precision(bits);
  const auto eval = f.evaluator(R, bits);
  const Real two_pi = ldexp(Real::pi(bits), 1);
  auto log_abs = [&](const Real& theta) {
    const Real a = abs(eval(unit_root_angle(theta) * R));
    return a.is_zero() ? Real::infinity(-1) : log(a);
  };

  auto pass = [&](unsigned n) -> std::pair<Real, Real> {
    std::vector<Real> th(n), v(n);
    for (unsigned k = 0; k < n; ++k) {
      th[k] = two_pi * Real(static_cast<long>(k), bits) / Real(static_cast<long>(n), bits);
      v[k] = log_abs(th[k]);
    }
    std::size_t arg = std::max_element(v.begin(), v.end()) - v.begin();
    Real best = v[arg], best_theta = th[arg];
    if (!refine || !best.is_finite()) return {best, best_theta};
    std::vector<std::size_t> peaks;
    for (unsigned k = 0; k < n; ++k) {
      if (v[k] >= v[(k + n - 1) % n] && v[k] >= v[(k + 1) % n]) peaks.push_back(k);
    }
    std::sort(peaks.begin(), peaks.end(), [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
    if (peaks.size() > 4) peaks.resize(4);
    const Real step = two_pi / static_cast<long>(n);
    const Real phi = (sqrt(Real(5, bits)) - 1) / 2;
    const double width_bits = std::log2(2 * 2 * M_PI / n) + static_cast<double>(bits) / 8 + 4;
    const int iterations = static_cast<int>(std::ceil(width_bits / 0.694));
    for (std::size_t k : peaks) {
      Real a = th[k] - step, b = th[k] + step;
      Real c = b - phi * (b - a), d = a + phi * (b - a);
      Real fc = log_abs(c), fd = log_abs(d);
      for (int it = 0; it < iterations; ++it) {
        if (fc > fd) {
          b = d;
          d = c;
          fd = fc;
          c = b - phi * (b - a);
          fc = log_abs(c);
        } else {
          a = c;
          c = d;
          fc = fd;
          d = a + phi * (b - a);
          fd = log_abs(d);
        }
      }
      if (fc > best) { best = fc; best_theta = c; }
      if (fd > best) { best = fd; best_theta = d; }
    }
    return {best, best_theta};
  };

  unsigned n = samples;
  auto [best, theta] = pass(n);
  bool converged = !refine;
  if (refine) {
    const Real tol = Real::pow2(-static_cast<long>(bits) / 4, bits);
    for (int doubling = 0; doubling < 3; ++doubling) {
      n *= 2;
      auto [next, next_theta] = pass(n);
      const bool small = !best.is_finite() ? !next.is_finite()
                                           : next.is_finite() && abs(next - best) < tol * max(Real(1, bits), abs(best));
      if (next > best) {
        best = next;
        theta = next_theta;
      }
      if (small) {
        converged = true;
        break;
      }
    }
  }
  return {best, theta, n, converged};
}

inline Real sup_norm_on_circle(const EntireFunction& f, const Real& r, unsigned samples,
                               Precision bits = kDefaultPrecision, bool refine = true) {
  return sup_norm_detailed(f, r, samples, bits, refine).log_sup;
}

// e^{-r} sqrt(r) |f|_r from a log sup.
inline Real normalized_from_log_sup(const Real& log_sup, const Real& r) {
  const Real rr = r.with_precision(std::max(log_sup.bits(), r.bits()));
  return exp(log_sup - rr + log(rr) / 2);
}

inline Real normalized_growth(const EntireFunction& f, const Real& r, unsigned samples,
                              Precision bits = kDefaultPrecision) {
  return normalized_from_log_sup(sup_norm_on_circle(f, r, samples, bits), r.with_precision(bits));
}

struct GrowthReport {
  std::string description;
  Precision bits = kDefaultPrecision;
  unsigned samples = 0;
  std::vector<Real> r_grid;
  std::vector<Real> log_sup_norm;
  std::vector<Real> normalized;
  // least-squares slope of log |f|_r against r over the upper half of the
  // grid (log |f|_r / r for a single radius)
  Real type_estimate;
};

inline GrowthReport growth_report(const EntireFunction& f, const std::vector<Real>& r_grid, unsigned samples,
                                  Precision bits = kDefaultPrecision) {
  require_precision(bits);
  detail::require_samples(samples);
  if (r_grid.empty()) throw std::invalid_argument("growth report needs a nonempty radius grid");
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    if (!(r_grid[i] > 0)) throw std::invalid_argument("radii must be positive");
    if (i > 0 && !(r_grid[i - 1] < r_grid[i])) throw std::invalid_argument("radii must be increasing");
  }
  GrowthReport out;
  out.description = f.description();
  out.bits = bits;
  out.samples = samples;
  for (const Real& r : r_grid) out.r_grid.push_back(r.with_precision(bits));
  out.log_sup_norm = parallel_map(out.r_grid, [&](const Real& r) { return sup_norm_on_circle(f, r, samples, bits); });
  for (std::size_t i = 0; i < out.r_grid.size(); ++i) {
    out.normalized.push_back(normalized_from_log_sup(out.log_sup_norm[i], out.r_grid[i]));
  }
  const std::size_t n = out.r_grid.size();
  const std::size_t first = n / 2;
  if (n - first < 2) {
    out.type_estimate = out.log_sup_norm.back() / out.r_grid.back();
  } else {
    Real sx(0, bits), sy(0, bits), sxx(0, bits), sxy(0, bits);
    const long m = static_cast<long>(n - first);
    for (std::size_t i = first; i < n; ++i) {
      sx = sx + out.r_grid[i];
      sy = sy + out.log_sup_norm[i];
      sxx = sxx + out.r_grid[i] * out.r_grid[i];
      sxy = sxy + out.r_grid[i] * out.log_sup_norm[i];
    }
    out.type_estimate = (sxy * m - sx * sy) / (sxx * m - sx * sx);
  }
  return out;
}

// max over n in [len/2, len) of exp(log|f^{(n)}(z0)| / n), skipping n = 0
// and vanishing jets. Returns 0 if every considered jet vanishes.
inline Real exponential_type_estimate(const std::vector<Real>& log_jets) {
  if (log_jets.size() < 16) throw std::invalid_argument("type estimate needs at least 16 jet terms");
  Precision bits = kMinPrecision;
  for (const Real& x : log_jets) bits = std::max(bits, x.bits());
  Real best(0, bits);
  for (std::size_t n = std::max<std::size_t>(1, log_jets.size() / 2); n < log_jets.size(); ++n) {
    if (!log_jets[n].is_finite()) continue;
    best = max(best, exp(log_jets[n].with_precision(bits) / static_cast<long>(n)));
  }
  return best;
}

// log |f^{(n)}(z0)| for n < count, -inf where the jet vanishes.
inline std::vector<Real> jet_log_magnitudes(const EntireFunction& f, const Cx& z0, unsigned count,
                                            Precision bits = kDefaultPrecision) {
  std::vector<Real> out;
  const Real threshold = Real::pow2(-static_cast<long>(bits) + 16, bits);
  Real scale(0, bits);
  for (unsigned n = 0; n < count; ++n) {
    const Real a = abs(f.derivative(n)(z0, bits));
    scale = max(scale, a);
    out.push_back(a <= threshold * scale ? Real::infinity(-1) : log(a));
  }
  return out;
}

// --- generating functions and integral formulas -------------------------------

// |sinh(z t)/sinh(t) - sum_{n<=N} t^{2n} L_n(z)|
inline Real genfunc_lidstone_residual(const Cx& z, const Cx& t, unsigned N, Precision bits = kDefaultPrecision) {
  require_precision(bits);
  const Precision wb = bits + 32;
  const Cx zz = with_precision(z, wb), tt = with_precision(t, wb);
  if (is_zero(tt)) throw std::invalid_argument("Lidstone generating function needs t != 0");
  if (!(abs(tt) < Real::pi(wb))) throw std::invalid_argument("Lidstone generating function needs |t| < pi");
  const auto lambda = detail::boundary_values(Family::lidstone, N, wb);
  // zp[j] = z^{2j+1}/(2j+1)!
  std::vector<Cx> zp(N + 1);
  const Cx z2 = zz * zz;
  Cx p = zz;
  for (unsigned j = 0; j <= N; ++j) {
    zp[j] = p * Real(inverse_factorial(2 * j + 1), wb);
    p = p * z2;
  }
  const Cx t2 = tt * tt;
  Cx sum(Real(0, wb)), tp(Real(1, wb));
  for (unsigned n = 0; n <= N; ++n) {
    Cx ln(Real(0, wb));
    for (unsigned j = 0; j <= n; ++j) ln += zp[j] * lambda[n - j];
    sum += tp * ln;
    tp = tp * t2;
  }
  return abs(sinh(zz * tt) / sinh(tt) - sum).with_precision(bits);
}

// |cosh(z t)/cosh(t) - sum_{n<=N} t^{2n} M_n(z)|
inline Real genfunc_whittaker_residual(const Cx& z, const Cx& t, unsigned N, Precision bits = kDefaultPrecision) {
  require_precision(bits);
  const Precision wb = bits + 32;
  const Cx zz = with_precision(z, wb), tt = with_precision(t, wb);
  if (!(abs(tt) < ldexp(Real::pi(wb), -1))) throw std::invalid_argument("Whittaker generating function needs |t| < pi/2");
  const auto mu = detail::boundary_values(Family::whittaker, N, wb);
  std::vector<Cx> zp(N + 1);
  const Cx z2 = zz * zz;
  Cx p(Real(1, wb));
  for (unsigned j = 0; j <= N; ++j) {
    zp[j] = p * Real(inverse_factorial(2 * j), wb);
    p = p * z2;
  }
  const Cx t2 = tt * tt;
  Cx sum(Real(0, wb)), tp(Real(1, wb));
  for (unsigned n = 0; n <= N; ++n) {
    Cx mn(Real(0, wb));
    for (unsigned j = 0; j <= n; ++j) mn += zp[j] * mu[n - j];
    sum += tp * mn;
    tp = tp * t2;
  }
  return abs(cosh(zz * tt) / cosh(tt) - sum).with_precision(bits);
}

// Residue formulas
//   L_n(z) = (-1)^n 2/pi^{2n+1} sin(pi z)
//            + (1/2 pi i) int_{|t|=3pi/2} t^{-2n-1} sinh(zt)/sinh(t) dt
//   M_n(z) = (-1)^n 2^{2n+2}/pi^{2n+1} cos(pi z/2)
//            + (1/2 pi i) int_{|t|=pi} t^{-2n-1} cosh(zt)/cosh(t) dt
// with the contour integral by the trapezoidal rule on `nodes` points.
// Returns |left side - right side| for n = 0..n_max; the integrand values
// on the contour are shared across n.
inline std::vector<Real> integral_formula_residuals(Family family, unsigned n_max, const Cx& z, unsigned nodes,
                                                    Precision bits = kDefaultPrecision) {
  require_precision(bits);
  if (nodes < 256 || (nodes & (nodes - 1)) != 0) {
    throw std::invalid_argument("quadrature nodes must be a power of two >= 256");
  }
  const Precision wb = bits + 32;
  const Cx zz = with_precision(z, wb);
  const Real pi = Real::pi(wb);
  const bool lid = family == Family::lidstone;
  const Real radius = lid ? pi * 3 / 2 : pi;
  const Real two_pi = ldexp(pi, 1);
  std::vector<Cx> u(nodes), w(nodes);
  for (unsigned k = 0; k < nodes; ++k) {
    u[k] = unit_root_angle(two_pi * static_cast<long>(k) / static_cast<long>(nodes));
    const Cx t = u[k] * radius;
    w[k] = lid ? sinh(zz * t) / sinh(t) : cosh(zz * t) / cosh(t);
  }
  std::vector<Real> out;
  const Cx s = lid ? sin(zz * pi) : cos(zz * ldexp(pi, -1));
  for (unsigned n = 0; n <= n_max; ++n) {
    // t^{-2n} = radius^{-2n} conj(u)^{2n}
    Cx q(Real(0, wb));
    for (unsigned k = 0; k < nodes; ++k) q += w[k] * pow(conj(u[k]), 2 * static_cast<unsigned long>(n));
    q = q / (pow(radius, 2 * static_cast<long>(n)) * static_cast<long>(nodes));
    const Real sign(n % 2 == 0 ? 1 : -1, wb);
    const Real scale = lid ? sign * 2 : sign * Real::pow2(2 * static_cast<long>(n) + 2, wb);
    const Cx pole = s * (scale / pow(pi, 2 * static_cast<long>(n) + 1));
    const Cx value = lid ? lidstone_value(n, zz, wb) : whittaker_value(n, zz, wb);
    out.push_back(abs(value - pole - q).with_precision(bits));
  }
  return out;
}

inline Real integral_formula_residual(Family family, unsigned n, const Cx& z, unsigned nodes,
                                      Precision bits = kDefaultPrecision) {
  return integral_formula_residuals(family, n, z, nodes, bits).back();
}

}  // namespace lidstone
