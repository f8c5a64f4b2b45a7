#pragma once

// Smallest-modulus zero of an entire function by the argument principle.
//
// The number of zeros in |t| < R is the winding number of f around 0 along
// |t| = R. It is measured by sampling f on equispaced nodes and summing the
// principal arguments of f(t_{k+1}) / f(t_k), refining arcs adaptively
// until every increment is below pi/4.
//
// The search doubles R from rho0 until the disc contains a zero, bisects
// the radius down to a thin annulus, and then runs Newton from 32 seed
// angles on the outer circle. The converged root of least modulus wins.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lidstone/complex.hpp"

namespace lidstone {

struct AnalyticFunction {
  std::function<Cx(const Cx&, Precision)> value;
  std::function<Cx(const Cx&, Precision)> derivative;
};

class ContourError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Returns the winding number, or nullopt if it could not be resolved (a
// zero sits on or extremely close to the circle). Arcs whose argument
// increment exceeds pi/4 are bisected adaptively, so a zero near the
// contour costs a logarithmic number of extra samples. Two passes with
// different initial grids must agree.
inline std::optional<long> winding_number(const AnalyticFunction& f, const Real& radius, Precision bits,
                                          unsigned initial_nodes = 64, int max_depth = 48) {
  const Real two_pi = ldexp(Real::pi(bits), 1);
  const Real r = radius.with_precision(bits);
  const Real limit = Real::pi(bits) / 4;
  auto sample = [&](const Real& theta) { return f.value(unit_root_angle(theta) * r, bits); };

  std::function<std::optional<Real>(const Real&, const Cx&, const Real&, const Cx&, int)> arc =
      [&](const Real& ta, const Cx& fa, const Real& tb, const Cx& fb, int depth) -> std::optional<Real> {
    const Real step = arg(fb * conj(fa));
    if (abs(step) <= limit) return step;
    if (depth >= max_depth) return std::nullopt;
    const Real tm = ldexp(ta + tb, -1);
    const Cx fm = sample(tm);
    if (is_zero(fm)) return std::nullopt;
    auto left = arc(ta, fa, tm, fm, depth + 1);
    if (!left) return std::nullopt;
    auto right = arc(tm, fm, tb, fb, depth + 1);
    if (!right) return std::nullopt;
    return *left + *right;
  };

  std::optional<long> previous;
  for (unsigned nodes : {initial_nodes, 2 * initial_nodes + 1}) {
    std::vector<Real> thetas(nodes + 1);
    std::vector<Cx> values(nodes + 1);
    for (unsigned k = 0; k <= nodes; ++k) {
      thetas[k] = two_pi * Real(static_cast<long>(k), bits) / Real(static_cast<long>(nodes), bits);
      values[k] = k == nodes ? values[0] : sample(thetas[k]);
      if (is_zero(values[k])) return std::nullopt;
    }
    Real total(0, bits);
    for (unsigned k = 0; k < nodes; ++k) {
      auto inc = arc(thetas[k], values[k], thetas[k + 1], values[k + 1], 0);
      if (!inc) return std::nullopt;
      total = total + *inc;
    }
    const long count = (total / two_pi + Real(0.5, bits)).to_integer_floor().get_si();
    if (previous && *previous != count) return std::nullopt;
    previous = count;
  }
  return previous;
}

struct ZeroResult {
  Cx zero;
  Real modulus;
  Real residual;  // |f(zero)|
  Real inner_radius;  // no zero of smaller modulus inside this circle
};

inline std::optional<Cx> newton_polish(const AnalyticFunction& f, Cx z, Precision bits, int max_iter = 200) {
  const Real tol = Real::pow2(-static_cast<long>(bits) + 8, bits);
  for (int it = 0; it < max_iter; ++it) {
    const Cx d = f.derivative(z, bits);
    if (is_zero(d)) return std::nullopt;
    const Cx step = f.value(z, bits) / d;
    z = z - step;
    if (!abs(z.re).is_finite() || !abs(z.im).is_finite()) return std::nullopt;
    if (abs(step) <= tol * max(abs(z), Real(1, bits))) {
      // one more step to settle the last bits
      const Cx d2 = f.derivative(z, bits);
      if (!is_zero(d2)) z = z - f.value(z, bits) / d2;
      return z;
    }
  }
  return std::nullopt;
}

struct ZeroSearchOptions {
  double rho0 = 0.25;
  int max_doublings = 48;
  int bisections = 24;
  Precision scan_bits = 64;
};

inline ZeroResult smallest_zero(const AnalyticFunction& f, Precision bits, const ZeroSearchOptions& opt = {}) {
  const Precision scan = opt.scan_bits;
  // Winding number at r. If a zero sits so close to the circle that the
  // count does not resolve, the radius is pushed outward by a relative
  // 2^-16 step and `r` is updated to the radius actually used.
  auto count_at = [&](Real& r) -> long {
    for (int attempt = 0; attempt < 16; ++attempt) {
      if (auto w = winding_number(f, r, scan)) return *w;
      r = r + ldexp(r, -16);
    }
    throw ContourError("winding number did not stabilise at radius " + r.to_string(10));
  };

  if (is_zero(f.value(Cx(Real(0, bits)), bits))) {
    return {Cx(Real(0, bits)), Real(0, bits), Real(0, bits), Real(0, bits)};
  }
  Real lo(opt.rho0, scan);
  while (count_at(lo) > 0) {
    lo = ldexp(lo, -1);
    if (lo < Real::pow2(-60, scan)) throw ContourError("zeros accumulate at the origin");
  }
  Real hi = ldexp(lo, 1);
  int doublings = 0;
  while (count_at(hi) == 0) {
    lo = hi;
    hi = ldexp(hi, 1);
    if (++doublings > opt.max_doublings) throw ContourError("no zero found up to radius " + hi.to_string(6));
  }
  for (int i = 0; i < opt.bisections && hi - lo > ldexp(hi, -18); ++i) {
    Real mid = ldexp(lo + hi, -1);
    if (count_at(mid) > 0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }

  const Real two_pi = ldexp(Real::pi(bits), 1);
  const Real outer = hi.with_precision(bits);
  const Real inner = lo.with_precision(bits);
  const Real slack = outer * Real::pow2(-20, bits);
  std::optional<Cx> best;
  for (int k = 0; k < 32; ++k) {
    // offset by half a step so symmetric functions do not seed on a saddle
    const Real theta = two_pi * (Real(k, bits) + Real(0.5, bits)) / 32;
    auto z = newton_polish(f, unit_root_angle(theta) * outer, bits);
    if (!z) continue;
    const Real m = abs(*z);
    if (m < inner - slack || m > outer + slack) continue;
    if (!best || m < abs(*best)) best = z;
  }
  if (!best) throw ContourError("Newton did not converge inside the located annulus");
  return {*best, abs(*best), abs(f.value(*best, bits)), inner};
}

}  // namespace lidstone
