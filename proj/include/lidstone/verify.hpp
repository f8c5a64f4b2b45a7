#pragma once

// Self-checks shared by the CLI `verify` command and the acceptance binary.
// Each suite runs one acceptance criterion and reports every sub-check
// separately, failing ones included.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lidstone/constants.hpp"
#include "lidstone/exactpoly.hpp"
#include "lidstone/float_families.hpp"
#include "lidstone/periodic.hpp"
#include "lidstone/series.hpp"
#include "lidstone/twopoint.hpp"

namespace lidstone::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  unsigned criterion = 0;
  std::string title;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return !checks.empty();
  }
  unsigned failures() const {
    unsigned n = 0;
    for (const auto& c : checks) n += c.pass ? 0 : 1;
    return n;
  }
};

struct Options {
  Precision bits = kDefaultPrecision;
  std::uint64_t seed = 20240611;
  unsigned samples = 256;
};

namespace detail {

inline std::string fmt(const Real& x, int digits = 6) { return x.to_string(digits); }

inline std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

inline Cx cx(double re, double im, Precision bits) { return {Real(re, bits), Real(im, bits)}; }

// printed equals v rounded or truncated to the printed number of decimals
inline bool matches_printed(const Real& v, const std::string& printed) {
  const auto dot = printed.find('.');
  const long decimals = dot == std::string::npos ? 0 : static_cast<long>(printed.size() - dot - 1);
  const Precision bits = v.bits();
  const Real p(printed, bits);
  const Real ulp = pow(Real(10, bits), -decimals);
  const bool rounded = abs(v - p) <= ulp / 2;
  const bool truncated = p <= v && v < p + ulp;
  return rounded || truncated;
}

inline Rational random_rational(std::mt19937_64& rng, long span, long max_den) {
  std::uniform_int_distribution<long> den(1, max_den);
  const long d = den(rng);
  std::uniform_int_distribution<long> num(-span * d, span * d);
  Rational q(num(rng), d);
  q.canonicalize();
  return q;
}

inline GaussianRational random_gaussian(std::mt19937_64& rng, long span, long max_den) {
  return {random_rational(rng, span, max_den), random_rational(rng, span, max_den)};
}

inline ComplexPoly<GaussianRational> random_poly(std::mt19937_64& rng, int degree) {
  std::vector<GaussianRational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_gaussian(rng, 5, 9));
  return ComplexPoly<GaussianRational>(std::move(c));
}

// |gap|^2 < 9.86 < pi^2
inline ExactFrame random_frame(std::mt19937_64& rng) {
  const GaussianRational s0 = random_gaussian(rng, 2, 5);
  for (;;) {
    const GaussianRational gap = random_gaussian(rng, 3, 7);
    const Rational n2 = norm(gap);
    if (sgn(n2) != 0 && n2 < Rational(986, 100)) return ExactFrame(s0, s0 + gap);
  }
}

inline Cx random_disc_point(std::mt19937_64& rng, Precision bits) {
  std::uniform_real_distribution<double> u(-1, 1);
  for (;;) {
    const double x = u(rng), y = u(rng);
    if (x * x + y * y < 1) return cx(x, y, bits);
  }
}

// log max |p(r e^{i theta})| over `samples` equispaced theta.
inline long double sampled_log_sup_ld(const std::vector<long double>& c, long double r, unsigned samples) {
  long double best = 0;
  for (unsigned k = 0; k < samples; ++k) {
    const long double th = 2 * M_PIl * k / samples;
    const std::complex<long double> z = std::polar(r, th);
    std::complex<long double> acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    best = std::max(best, std::abs(acc));
  }
  return std::log(best);
}

}  // namespace detail

// 1. printed coefficients of the first Lidstone and Whittaker polynomials
inline SuiteResult tables(const Options&) {
  SuiteResult out{"tables", 1, "exact tables", {}};
  auto poly = [](std::initializer_list<const char*> cs) {
    std::vector<Rational> v;
    for (const char* c : cs) v.push_back(rational_from_string(c));
    return RationalPoly(std::move(v));
  };
  const std::vector<RationalPoly> lid = {poly({"0", "1"}), poly({"0", "-1/6", "0", "1/6"}),
                                         poly({"0", "7/360", "0", "-1/36", "0", "1/120"})};
  const std::vector<RationalPoly> whi = {poly({"1"}), poly({"-1/2", "0", "1/2"}), poly({"5/24", "0", "-1/4", "0", "1/24"}),
                                         poly({"-61/720", "0", "5/48", "0", "-1/48", "0", "1/720"})};
  for (unsigned n = 0; n < lid.size(); ++n) {
    out.checks.push_back({"lidstone_poly(" + std::to_string(n) + ")", lidstone_poly(n) == lid[n], ""});
  }
  for (unsigned n = 0; n < whi.size(); ++n) {
    out.checks.push_back({"whittaker_poly(" + std::to_string(n) + ")", whittaker_poly(n) == whi[n], ""});
  }
  return out;
}

// 2. Lambda_n^{(2k)}(1) = delta_kn, Lambda_n^{(2k)}(0) = 0, M_n^{(2k)}(1) =
// delta_kn, M_n^{(2k+1)}(0) = 0 for n, k <= 20
inline SuiteResult deltas(const Options&) {
  SuiteResult out{"deltas", 2, "delta identities", {}};
  const Rational zero(0), one(1);
  unsigned bad[4] = {0, 0, 0, 0};
  for (unsigned n = 0; n <= 20; ++n) {
    RationalPoly l = lidstone_poly(n), m = whittaker_poly(n);
    for (unsigned k = 0; k <= 20; ++k) {
      const Rational delta(k == n ? 1 : 0);
      if (eval_exact(l, one) != delta) ++bad[0];
      if (eval_exact(l, zero) != 0) ++bad[1];
      if (eval_exact(m, one) != delta) ++bad[2];
      if (eval_exact(poly_derivative(m, 1), zero) != 0) ++bad[3];
      l = poly_derivative(l, 2);
      m = poly_derivative(m, 2);
    }
  }
  const char* names[4] = {"Lambda_n^(2k)(1) = delta_kn", "Lambda_n^(2k)(0) = 0", "M_n^(2k)(1) = delta_kn",
                          "M_n^(2k+1)(0) = 0"};
  for (int i = 0; i < 4; ++i) {
    out.checks.push_back({names[i], bad[i] == 0, std::to_string(441 - bad[i]) + "/441 exact"});
  }
  return out;
}

// 3. reconstruct(expand(f)) = f on random polynomials and frames
inline SuiteResult roundtrip(const Options& opt) {
  SuiteResult out{"roundtrip", 3, "two-point round trip", {}};
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> even_degree(0, 25), odd_degree(0, 24);
  unsigned even_ok = 0, odd_ok = 0;
  const unsigned trials = 100;
  for (unsigned trial = 0; trial < trials; ++trial) {
    const ExactFrame frame = detail::random_frame(rng);
    const auto f = detail::random_poly(rng, even_degree(rng));
    if (reconstruct_even(frame, expand_even(frame, f)) == f) ++even_ok;
    const auto h = detail::random_poly(rng, odd_degree(rng));
    if (reconstruct_odd_even(frame, expand_odd_even(frame, h)) == h) ++odd_ok;
  }
  out.checks.push_back({"even scheme, degree <= 25", even_ok == trials, std::to_string(even_ok) + "/100 exact"});
  out.checks.push_back({"odd/even scheme, degree <= 24", odd_ok == trials, std::to_string(odd_ok) + "/100 exact"});
  return out;
}

// 4. threshold and growth constants against their printed digits
inline SuiteResult constants(const Options& opt) {
  SuiteResult out{"constants", 4, "constants", {}};
  const Precision bits = opt.bits;
  const RealConstant n = nu(bits);
  out.checks.push_back({"nu reproduces 2.1773", detail::matches_printed(n.value, "2.1773"), "nu = " + detail::fmt(n.value, 12)});
  const Real literal = nu_literal_relation_residual(bits);
  out.checks.push_back({"|e^nu + e^-nu - 4 nu| < 2^-240", literal < Real::pow2(-240, bits),
                        "residual " + detail::fmt(literal) + "; e^nu - e^-nu - 4 nu residual " + detail::fmt(n.residual)});
  const RealConstant l = log_2_plus_sqrt3(bits);
  out.checks.push_back(
      {"log(2+sqrt3) reproduces 1.3169578", detail::matches_printed(l.value, "1.3169578"), detail::fmt(l.value, 12)});
  const Real t2 = tau_m(2, bits).value;
  const Real err = abs(t2 - ldexp(Real::pi(bits), -1));
  out.checks.push_back({"tau_2 = pi/2 within 2^-200", err < Real::pow2(-200, bits), "|tau_2 - pi/2| = " + detail::fmt(err)});
  const RealConstant g1 = gamma1(bits);
  out.checks.push_back({"gamma_1 reproduces 1.2121368", detail::matches_printed(g1.value, "1.2121368"),
                        "gamma_1 = 2/(4 - e + 1/e) = " + detail::fmt(g1.value, 12)});
  const RealConstant g1p = gamma1_prime(bits);
  out.checks.push_back({"gamma'_1 reproduces 2.1885699", detail::matches_printed(g1p.value, "2.1885699"),
                        "gamma'_1 = " + detail::fmt(g1p.value, 12)});
  return out;
}

// 5. generating function residuals at N = 64 on a 5x5 (z, t) grid per family
inline SuiteResult genfunc(const Options& opt) {
  SuiteResult out{"genfunc", 5, "generating functions", {}};
  const Precision bits = opt.bits;
  const Real tol(1e-30, bits);
  std::vector<Cx> zs;
  for (int j = 0; j < 5; ++j) {
    // |z| = j/2 <= 2
    zs.push_back(unit_root_angle(Real(0.7 * j, bits)) * Real(0.5 * j, bits));
  }
  for (Family family : {Family::lidstone, Family::whittaker}) {
    const Real radius = family == Family::lidstone ? Real::pi(bits) : ldexp(Real::pi(bits), -1);
    for (int k = 0; k < 5; ++k) {
      const double frac = 0.1 + 0.2 * k;
      const Cx t = unit_root_angle(Real(0.4 + 0.9 * k, bits)) * (radius * Real(frac, bits));
      Real worst(0, bits);
      for (const Cx& z : zs) {
        const Real r = family == Family::lidstone ? genfunc_lidstone_residual(z, t, 64, bits)
                                                  : genfunc_whittaker_residual(z, t, 64, bits);
        worst = max(worst, r);
      }
      out.checks.push_back({to_string(family) + " |t| = " + detail::fmt(frac) + " radius", worst < tol,
                            "max residual over 5 z: " + detail::fmt(worst)});
    }
  }
  return out;
}

// 6. contour integral formulas, n <= 10, 4096 nodes
inline SuiteResult integral(const Options& opt) {
  SuiteResult out{"integral", 6, "integral formulas", {}};
  const Precision bits = opt.bits;
  const Real tol(1e-20, bits);
  const std::vector<std::pair<std::string, Cx>> points = {{"1/2", detail::cx(0.5, 0, bits)}, {"2+i", detail::cx(2, 1, bits)}};
  for (Family family : {Family::lidstone, Family::whittaker}) {
    for (const auto& [label, z] : points) {
      const std::vector<Real> res = integral_formula_residuals(family, 10, z, 4096, bits);
      Real worst(0, bits);
      for (const Real& r : res) worst = max(worst, r);
      out.checks.push_back({to_string(family) + " z = " + label, worst < tol, "max residual n <= 10: " + detail::fmt(worst)});
    }
  }
  return out;
}

// 7. eigenfunction jets on the frame (0, 1) with a = (3, -2)
inline SuiteResult eigen(const Options& opt) {
  SuiteResult out{"eigen", 7, "eigenfunction jets", {}};
  const Precision bits = opt.bits;
  const Real tol(1e-25, bits);
  const Cx s0 = detail::cx(0, 0, bits), s1 = detail::cx(1, 0, bits);
  const Cx a0 = detail::cx(3, 0, bits), a1 = detail::cx(-2, 0, bits);
  const EntireFunction sh = EntireFunction::exponential_sum(sinh_eigenfunction(s0, s1, a0, a1));
  const EntireFunction ch = EntireFunction::exponential_sum(cosh_eigenfunction(s0, s1, a0, a1));
  Real e[4] = {Real(0, bits), Real(0, bits), Real(0, bits), Real(0, bits)};
  for (unsigned n = 0; n <= 10; ++n) {
    e[0] = max(e[0], abs(sh.derivative(2 * n)(s0, bits) - a0));
    e[1] = max(e[1], abs(sh.derivative(2 * n)(s1, bits) - a1));
    e[2] = max(e[2], abs(ch.derivative(2 * n + 1)(s0, bits) - a0));
    e[3] = max(e[3], abs(ch.derivative(2 * n)(s1, bits) - a1));
  }
  const char* names[4] = {"sinh form f^(2n)(0) = 3", "sinh form f^(2n)(1) = -2", "cosh form f^(2n+1)(0) = 3",
                          "cosh form f^(2n)(1) = -2"};
  for (int i = 0; i < 4; ++i) out.checks.push_back({names[i], e[i] < tol, "max error n <= 10: " + detail::fmt(e[i])});
  return out;
}

// 8. lacunary series on the frame (0, 1), K = 4: jets and growth under gamma
inline SuiteResult lacunary(const Options& opt) {
  SuiteResult out{"lacunary", 8, "lacunary series", {}};
  const Precision bits = opt.bits;
  const Precision growth_bits = std::max<Precision>(512, bits);
  const ExactFrame unit(GaussianRational(0), GaussianRational(1));
  const GammaFamily gf = gamma_family(unit, growth_bits);
  const Real tol = Real::pow2(-static_cast<long>(bits) / 2, bits);
  for (Family family : {Family::lidstone, Family::whittaker}) {
    const bool lid = family == Family::lidstone;
    const std::string name = to_string(family);
    const LacunarySeries s = build_lacunary(unit, family, {1, 1, 1, 1, 1}, 4, bits);
    const unsigned long long n2 = s.support[2];
    const unsigned low_offset = lid ? 0 : 1;  // f^(2n)(0) or f^(2n+1)(0)

    bool structural = true;
    for (unsigned long long n = 0; n <= n2; ++n) {
      const unsigned even = static_cast<unsigned>(2 * n);
      structural = structural && lacunary_jet_exact(s, 0, even + low_offset) == GaussianRational(0);
      structural = structural && lacunary_jet_exact(s, 1, even) == GaussianRational(Rational(s.coefficient(n)));
    }
    const std::string low = lid ? "f^(2n)(0) = 0" : "f^(2n+1)(0) = 0";
    out.checks.push_back({name + " exact jets " + low + ", f^(2n)(1) = e_n, n <= " + std::to_string(n2), structural, ""});

    const EntireFunction f = EntireFunction::lacunary(s);
    Real worst(0, bits);
    for (unsigned long long n = 0; n <= n2; ++n) {
      const unsigned even = static_cast<unsigned>(2 * n);
      worst = max(worst, abs(f.derivative(even + low_offset)(Cx(Real(0, bits)), bits)));
      worst = max(worst, abs(f.derivative(even)(Cx(Real(1, bits)), bits) - Cx(Real(s.coefficient(n), bits))));
    }
    out.checks.push_back({name + " numeric jets n <= " + std::to_string(n2), worst < tol, "max error " + detail::fmt(worst)});

    const LacunarySeries sg = build_lacunary(unit, family, {1, 1, 1, 1, 1}, 4, growth_bits);
    const EntireFunction fg = EntireFunction::lacunary(sg);
    std::vector<Real> grid;
    for (int r = 10; r <= 60; r += 5) grid.emplace_back(static_cast<long>(r), growth_bits);
    const GrowthReport g = growth_report(fg, grid, opt.samples, growth_bits);
    const Real bound = lid ? *gf.gamma : *gf.gamma_prime;
    std::size_t arg = 0;
    for (std::size_t i = 1; i < g.normalized.size(); ++i) {
      if (g.normalized[i] > g.normalized[arg]) arg = i;
    }
    Real dropped = Real::infinity(-1);
    for (const Real& r : grid) dropped = max(dropped, lacunary_dropped_log_bound(sg, 0, r, growth_bits));
    out.checks.push_back({name + " normalized growth <= " + (lid ? "gamma" : "gamma'") + " on r = 10..60",
                          g.normalized[arg] <= bound,
                          "max " + detail::fmt(g.normalized[arg]) + " at r = " + detail::fmt(g.r_grid[arg], 3) +
                              ", bound " + detail::fmt(bound) + ", log of dropped-term bound <= " + detail::fmt(dropped)});
  }
  return out;
}

// 9. periodic interpolation, null solutions and the m = 2 zero
inline SuiteResult periodic(const Options& opt) {
  SuiteResult out{"periodic", 9, "periodic interpolation", {}};
  const Precision bits = opt.bits;
  const Real tol(1e-20, bits);
  std::mt19937_64 rng(opt.seed);
  for (unsigned m : {2U, 3U, 4U, 6U}) {
    PeriodicNodeSet nodes;
    unsigned draws = 0;
    for (;;) {
      std::vector<Cx> sigma;
      for (unsigned j = 0; j < m; ++j) sigma.push_back(detail::random_disc_point(rng, bits));
      ++draws;
      nodes = make_nodes(m, sigma, bits);
      if (abs(delta_determinant(nodes, Cx(Real(1, bits)))) > Real(1e-6, bits)) break;
    }
    std::vector<Cx> a;
    for (unsigned j = 0; j < m; ++j) a.push_back(detail::random_disc_point(rng, bits) * Real(4, bits));
    const std::string tag = "m = " + std::to_string(m);
    try {
      const JetReport r = verify_periodic_jets(periodic_interpolant(nodes, a), nodes, a, 5, tol);
      out.checks.push_back({tag + " interpolant jets n <= 5", r.pass,
                            "max error " + detail::fmt(r.max_error) + " over " + std::to_string(r.checks) + " jets"});
    } catch (const std::exception& e) {
      out.checks.push_back({tag + " interpolant jets n <= 5", false, e.what()});
    }
    try {
      const NullSolution s = null_solution(nodes);
      const JetReport r = verify_periodic_jets(s.f, nodes, std::vector<Cx>(m, Cx(Real(0, bits))), 5, tol);
      out.checks.push_back({tag + " null solution jets vanish", r.pass,
                            "|alpha| = " + detail::fmt(abs(s.alpha)) + ", max jet " + detail::fmt(r.max_error)});
    } catch (const std::exception& e) {
      out.checks.push_back({tag + " null solution jets vanish", false, e.what()});
    }
  }
  const DeltaZero z = smallest_delta_zero(make_nodes(2, {Cx(Real(1, bits)), Cx(Real(0, bits))}, bits));
  const Real err = abs(z.modulus - ldexp(Real::pi(bits), -1));
  out.checks.push_back({"m = 2, sigma = (1, 0): smallest zero = pi/2", err < Real(1e-30, bits), "error " + detail::fmt(err)});
  return out;
}

// 10. sup bounds, the r^N/N! inequality and tail sums
inline SuiteResult bounds(const Options& opt) {
  SuiteResult out{"bounds", 10, "bound suites", {}};
  const Precision bits = opt.bits;
  const ExactFrame unit(GaussianRational(0), GaussianRational(1));
  for (Family family : {Family::lidstone, Family::whittaker}) {
    const bool lid = family == Family::lidstone;
    unsigned ok = 0, total = 0;
    long double worst_margin = INFINITY;
    for (unsigned n = 0; n <= 40; ++n) {
      const auto c = lid ? lidstone_coefficients_ld(n) : whittaker_coefficients_ld(n);
      for (int r : {1, 2, 5, 10, 20, 40, 80}) {
        const long double sampled = detail::sampled_log_sup_ld(c, r, 256);
        const Real rr(static_cast<long>(r), bits);
        const Real b = lid ? lidstone_sup_bound(unit, n, rr, BoundKind::i, {}, bits)
                           : whittaker_sup_bound(unit, n, rr, BoundKind::i, {}, bits);
        const long double margin = b.to_long_double() - sampled;
        worst_margin = std::min(worst_margin, margin);
        ok += margin >= 0 ? 1 : 0;
        ++total;
      }
    }
    out.checks.push_back({"bound (i) dominates sampled " + to_string(family) + " sup norms", ok == total,
                          std::to_string(ok) + "/" + std::to_string(total) + ", smallest log margin " +
                              detail::fmt(static_cast<double>(worst_margin))});
  }

  const double r0 = stirling_lemma_r0();
  unsigned ok = 0, total = 0;
  for (double r = r0; r <= 100; r += 0.5) {
    const Real rr(r, bits);
    for (unsigned N = 1; N <= 500; ++N) {
      ok += stirling_corollary_check(rr, N, bits) ? 1 : 0;
      ++total;
    }
  }
  out.checks.push_back({"r^N/N! <= e^(r+1/(4r))/sqrt(2 pi r) on r in [r0, 100] x N in [1, 500]", ok == total,
                        std::to_string(ok) + "/" + std::to_string(total) + ", r0 = " + detail::fmt(r0)});

  const GammaFamily gf = gamma_family(unit, bits);
  std::vector<double> radii{r0};
  for (int r = static_cast<int>(std::ceil(r0)); r <= 80; ++r) {
    if (r > r0) radii.push_back(r);
  }
  for (bool lid : {true, false}) {
    double worst = 0, at = 0;
    for (double r : radii) {
      const TailSum t = tail_sum(lid, 1.0, r, (lid ? *gf.gamma4 : *gf.gamma4_prime).to_double());
      const double v = t.value + t.remainder_bound;
      if (v > worst) worst = v, at = r;
    }
    out.checks.push_back({std::string(lid ? "lidstone" : "whittaker") + " tail sums < 1 on r in {r0, 1, ..., 80}", worst < 1,
                          "max " + detail::fmt(worst) + " at r = " + detail::fmt(at)});
  }
  return out;
}

// 11. exponential type of sin(l pi z) from 64 jets
inline SuiteResult type(const Options& opt) {
  SuiteResult out{"type", 11, "type estimation", {}};
  const Precision bits = opt.bits;
  const Cx s0 = detail::cx(0, 0, bits), s1 = detail::cx(1, 0, bits);
  for (unsigned l = 1; l <= 3; ++l) {
    const EntireFunction f = EntireFunction::exponential_sum(sine_family(s0, s1, l));
    const Real est = exponential_type_estimate(jet_log_magnitudes(f, s0, 64, bits));
    const Real target = Real::pi(bits) * static_cast<long>(l);
    const Real rel = abs(est / target - 1);
    out.checks.push_back({"l = " + std::to_string(l) + " type within 5% of l pi", rel < Real(0.05, bits),
                          "estimate " + detail::fmt(est) + ", relative error " + detail::fmt(rel)});
  }
  return out;
}

// 12. normalized growth of the Polya series with all e_n = 1
inline SuiteResult polya(const Options& opt) {
  SuiteResult out{"polya", 12, "Polya example", {}};
  const Precision bits = opt.bits;
  const EntireFunction f = EntireFunction::polya({1});
  const Real inv = Real(1, bits) / sqrt(ldexp(Real::pi(bits), 1));
  const Real upper = inv * Real(1.05, bits), lower = inv * Real(0.3, bits);
  std::vector<Real> grid;
  for (int r : {4, 8, 16, 32, 64}) grid.emplace_back(static_cast<long>(r), bits);
  const GrowthReport g = growth_report(f, grid, opt.samples, bits);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const long r = grid[i].to_integer_floor().get_si();
    const bool need_lower = r >= 16;
    const bool pass = g.normalized[i] <= upper && (!need_lower || g.normalized[i] > lower);
    out.checks.push_back({"r = " + std::to_string(r) + (need_lower ? ": 0.3 < sqrt(2 pi) N(r) <= 1.05" : ": sqrt(2 pi) N(r) <= 1.05"),
                          pass, "sqrt(2 pi) e^-r sqrt(r) |f|_r = " + detail::fmt(g.normalized[i] / inv)});
  }
  return out;
}

struct Suite {
  std::string name;
  unsigned criterion;
  std::function<SuiteResult(const Options&)> run;
};

inline const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"tables", 1, tables},    {"deltas", 2, deltas},     {"roundtrip", 3, roundtrip}, {"constants", 4, constants},
      {"genfunc", 5, genfunc},  {"integral", 6, integral}, {"eigen", 7, eigen},         {"lacunary", 8, lacunary},
      {"periodic", 9, periodic}, {"bounds", 10, bounds},   {"type", 11, type},          {"polya", 12, polya}};
  return all;
}

// Looks a suite up by name or criterion number ("8" or "08").
inline const Suite* find_suite(const std::string& key) {
  for (const auto& s : suites()) {
    if (s.name == key) return &s;
  }
  if (!key.empty() && key.find_first_not_of("0123456789") == std::string::npos && key.size() <= 3) {
    const unsigned n = static_cast<unsigned>(std::stoul(key));
    for (const auto& s : suites()) {
      if (s.criterion == n) return &s;
    }
  }
  return nullptr;
}

// Runs a suite; an exception becomes a single failing check.
inline SuiteResult run(const Suite& s, const Options& opt) {
  try {
    return s.run(opt);
  } catch (const std::exception& e) {
    return {s.name, s.criterion, s.name, {{"suite raised", false, e.what()}}};
  }
}

inline nlohmann::ordered_json to_json(const SuiteResult& r) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"suite", r.suite}, {"criterion", r.criterion}, {"title", r.title}, {"pass", r.pass()}, {"checks", checks}};
}

}  // namespace lidstone::verify
