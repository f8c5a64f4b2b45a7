#include "lidstone/series.hpp"

#include <catch_amalgamated.hpp>

using namespace lidstone;

namespace {

Real dec(const char* s, Precision bits = 256) { return Real(std::string(s), bits); }

Cx cx(double re, double im = 0, Precision bits = 256) { return {Real(re, bits), Real(im, bits)}; }

EntireFunction exp_function(Precision bits = 256) {
  return EntireFunction::exponential_sum(ExponentialSum({{cx(1, 0, bits), cx(1, 0, bits)}}), "exp");
}

// f'(z0) by the trapezoidal rule for the Cauchy integral on |z - z0| = rho.
Cx cauchy_derivative(const EntireFunction& f, const Cx& z0, double rho, unsigned nodes, Precision bits) {
  const Real two_pi = ldexp(Real::pi(bits), 1);
  Cx acc(Real(0, bits));
  for (unsigned k = 0; k < nodes; ++k) {
    const Cx u = unit_root_angle(two_pi * static_cast<long>(k) / static_cast<long>(nodes)) * Real(rho, bits);
    acc += f(z0 + u, bits) / u;
  }
  return acc / Real(static_cast<long>(nodes), bits);
}

}  // namespace

TEST_CASE("scalar tables reproduce the exact families", "[series][oracle]") {
  const Rational zs[] = {Rational(1, 3), Rational(-7, 5), Rational(5, 2)};
  for (unsigned n = 0; n <= 20; ++n) {
    for (const Rational& q : zs) {
      const Real exact_l(eval_exact(lidstone_poly(n), q), 256);
      const Real exact_m(eval_exact(whittaker_poly(n), q), 256);
      const Cx z(Real(q, 256), Real(0, 256));
      CHECK(abs(lidstone_value(n, z, 256) - Cx(exact_l)) <= Real::pow2(-240, 256) * max(Real(1, 256), abs(exact_l)));
      CHECK(abs(whittaker_value(n, z, 256) - Cx(exact_m)) <= Real::pow2(-240, 256) * max(Real(1, 256), abs(exact_m)));
    }
  }
}

TEST_CASE("sup_norm_on_circle", "[series]") {
  CHECK(abs(sup_norm_on_circle(exp_function(), Real(10, 256), 64, 256) - Real(10, 256)) < Real::pow2(-240, 256));

  const EntireFunction square = EntireFunction::polynomial(ComplexPoly<Cx>({cx(0), cx(0), cx(1)}), "z^2");
  CHECK(abs(sup_norm_on_circle(square, Real(3, 256), 64, 256) - log(Real(9, 256))) < Real::pow2(-240, 256));

  // frozen from 16384-point sampling at 70 digits (maximiser z = -5i)
  const EntireFunction sine = EntireFunction::closure(
      [](const Cx& z, Precision b) { return sin(with_precision(z, b)); }, nullptr, "sin");
  const Real oracle = log(dec("74.203210577788758977009471996064565599619409004425816980661"));
  const SupNorm s = sup_norm_detailed(sine, Real(5, 256), 64, 256);
  CHECK(s.converged);
  CHECK(abs(s.log_sup - oracle) < Real(1e-56, 256));

  // lower-bound semantics: the unrefined pass never exceeds the refined one
  const Real coarse = sup_norm_on_circle(sine, Real(5, 256), 67, 256, false);
  CHECK(coarse <= s.log_sup);
  CHECK(oracle - coarse < Real(0.01, 256));

  CHECK_THROWS_AS(sup_norm_on_circle(sine, Real(5, 256), 32, 256), std::invalid_argument);
  CHECK_THROWS_AS(sup_norm_on_circle(sine, Real(0, 256), 64, 256), std::invalid_argument);
}

TEST_CASE("normalized_growth", "[series]") {
  CHECK(abs(normalized_growth(exp_function(), Real(100, 256), 64, 256) - Real(10, 256)) < Real(1e-60, 256));
  const EntireFunction one = EntireFunction::polynomial(ComplexPoly<Cx>({cx(1)}), "1");
  const Real r10(10, 256);
  CHECK(abs(normalized_growth(one, r10, 64, 256) - sqrt(r10) * exp(-r10)) < Real(1e-70, 256));

  // positive coefficients: the sup sits at z = r; frozen direct summation
  const EntireFunction polya = EntireFunction::polya({1});
  const Real n32 = normalized_growth(polya, Real(32, 256), 64, 256);
  CHECK(abs(n32 - dec("0.4020472612457814213770717323134301638020309921891777106592175850929019")) < Real(1e-60, 256));
  const double inv = 1 / std::sqrt(2 * M_PI);
  CHECK(n32.to_double() > 0.3 * inv);
  CHECK(n32.to_double() < 1.05 * inv);
}

TEST_CASE("growth_report", "[series]") {
  const std::vector<Real> grid{Real(2, 128), Real(4, 128), Real(8, 128), Real(16, 128)};
  const GrowthReport g = growth_report(exp_function(128), grid, 64, 128);
  REQUIRE(g.r_grid.size() == 4);
  REQUIRE(g.log_sup_norm.size() == 4);
  REQUIRE(g.normalized.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(abs(g.normalized[i] - exp(g.log_sup_norm[i] - g.r_grid[i] + log(g.r_grid[i]) / 2)) < Real::pow2(-120, 128));
    CHECK(abs(g.normalized[i] - sqrt(g.r_grid[i])) < Real::pow2(-110, 128));
  }
  CHECK(abs(g.type_estimate - Real(1, 128)) < Real::pow2(-100, 128));
  CHECK_THROWS_AS(growth_report(exp_function(128), {Real(2, 128), Real(1, 128)}, 64, 128), std::invalid_argument);
}

TEST_CASE("parallel grid evaluation matches serial", "[series][concurrency]") {
  const ExactFrame unit(GaussianRational(0), GaussianRational(1));
  const EntireFunction f = EntireFunction::lacunary(build_lacunary(unit, Family::lidstone, {1, -1, 1}, 2, 128));
  std::vector<Real> grid;
  for (int r = 1; r <= 8; ++r) grid.push_back(Real(r, 128));
  const auto serial = parallel_map(grid, [&](const Real& r) { return sup_norm_on_circle(f, r, 64, 128); }, 1);
  const auto threaded = parallel_map(grid, [&](const Real& r) { return sup_norm_on_circle(f, r, 64, 128); }, 4);
  for (std::size_t i = 0; i < grid.size(); ++i) CHECK(serial[i] == threaded[i]);
}

TEST_CASE("exponential_type_estimate", "[series]") {
  std::vector<Real> ones(20, Real(0, 128));
  CHECK(abs(exponential_type_estimate(ones) - Real(1, 128)) < Real::pow2(-120, 128));
  std::vector<Real> powers;
  for (long n = 0; n < 20; ++n) powers.push_back(log(Real(2, 128)) * n);
  CHECK(abs(exponential_type_estimate(powers) - Real(2, 128)) < Real::pow2(-120, 128));
  CHECK_THROWS_AS(exponential_type_estimate(std::vector<Real>(15, Real(0, 128))), std::invalid_argument);

  const Cx s0 = cx(0), s1 = cx(1);
  for (unsigned l = 1; l <= 3; ++l) {
    const EntireFunction f = EntireFunction::exponential_sum(sine_family(s0, s1, l));
    const Real est = exponential_type_estimate(jet_log_magnitudes(f, s0, 64));
    const double expected = l * M_PI;
    CHECK(std::abs(est.to_double() - expected) < 0.05 * expected);
  }
}

TEST_CASE("genfunc_lidstone_residual", "[series]") {
  const Cx one = cx(1);
  CHECK(genfunc_lidstone_residual(one, cx(2), 48) < Real(1e-30, 256));
  CHECK(genfunc_lidstone_residual(cx(0), cx(1.5, 0.5), 10).is_zero());
  // N = 0: sinh(zt)/sinh(t) -> z as t -> 0
  CHECK(genfunc_lidstone_residual(cx(0.7), cx(1e-10), 0) < Real(1e-19, 256));
  CHECK_THROWS_AS(genfunc_lidstone_residual(one, cx(0), 4), std::invalid_argument);
  CHECK_THROWS_AS(genfunc_lidstone_residual(one, cx(0, 3.2), 4), std::invalid_argument);

  // geometric decay with ratio (|t|/pi)^2 per term
  for (double zr : {0.5, 1.5}) {
    for (double tm : {0.5, 1.5, 2.5}) {
      const Cx z = cx(zr, 0.5), t = cx(tm * 0.6, tm * 0.8);
      for (unsigned N : {8U, 16U, 24U}) {
        const Real a = genfunc_lidstone_residual(z, t, N);
        const Real b = genfunc_lidstone_residual(z, t, N + 8);
        CHECK(b / a < pow(Real(tm, 256) / Real::pi(256), 8) * 4);
      }
    }
  }
}

TEST_CASE("genfunc_whittaker_residual", "[series]") {
  CHECK(genfunc_whittaker_residual(cx(1), cx(0), 0).is_zero());
  CHECK(genfunc_whittaker_residual(cx(2), cx(1), 48) < Real(1e-19, 256));
  CHECK(genfunc_whittaker_residual(cx(0), cx(0.3), 48) < Real(1e-30, 256));
  CHECK_THROWS_AS(genfunc_whittaker_residual(cx(1), cx(1.6), 4), std::invalid_argument);
  for (double tm : {0.3, 0.8, 1.3}) {
    const Cx z = cx(1.2, -0.3), t = cx(0, tm);
    for (unsigned N : {8U, 16U}) {
      const Real a = genfunc_whittaker_residual(z, t, N);
      const Real b = genfunc_whittaker_residual(z, t, N + 8);
      CHECK(b / a < pow(Real(2 * tm, 256) / Real::pi(256), 8) * 4);
    }
  }
}

TEST_CASE("integral_formula_residual", "[series]") {
  CHECK(integral_formula_residual(Family::lidstone, 0, cx(0.5), 1024) < Real(1e-20, 256));
  CHECK(integral_formula_residual(Family::lidstone, 5, cx(2, 1), 4096) < Real(1e-20, 256));
  CHECK(integral_formula_residual(Family::whittaker, 3, cx(1), 1024) < Real(1e-20, 256));
  CHECK_THROWS_AS(integral_formula_residual(Family::lidstone, 0, cx(0.5), 128), std::invalid_argument);
  CHECK_THROWS_AS(integral_formula_residual(Family::lidstone, 0, cx(0.5), 1000), std::invalid_argument);
}

TEST_CASE("build_lacunary", "[series]") {
  const ExactFrame unit(GaussianRational(0), GaussianRational(1));
  const LacunarySeries l = build_lacunary(unit, Family::lidstone, {1, 1, 1, 1, 1}, 4);
  CHECK(l.support == std::vector<unsigned long long>{1, 3, 19, 751, 1172491});
  const LacunarySeries w = build_lacunary(unit, Family::whittaker, {1, 1, 1, 1, 1}, 4);
  CHECK(w.support == std::vector<unsigned long long>{1, 4, 57, 11415, 457778911});
  for (std::size_t k = 0; k + 1 < l.support.size(); ++k) {
    const Real n(static_cast<long>(l.support[k]), 256);
    CHECK(Real(static_cast<long>(l.support[k + 1]), 256) >= l.gamma4 * n * n);
  }

  // K = 0: f = Ls_1(z) = L_1(z) = (z^3 - z)/6 on the unit frame
  const EntireFunction f = EntireFunction::lacunary(build_lacunary(unit, Family::lidstone, {1}, 0));
  for (double x : {-1.5, 0.3, 2.0}) {
    const Real expected = (Real(x, 256) * x * x - x) / 6;
    CHECK(abs(f(cx(x, 0.25), 256) - lidstone_value(1, cx(x, 0.25), 256)) < Real::pow2(-240, 256));
    CHECK(abs(f(cx(x), 256) - Cx(expected)) < Real::pow2(-240, 256));
  }

  CHECK_THROWS_WITH(build_lacunary(ExactFrame(GaussianRational(0), GaussianRational(Rational(16, 5))), Family::lidstone, {1}, 0),
                    Catch::Matchers::ContainsSubstring("< pi"));
  CHECK_THROWS_WITH(build_lacunary(ExactFrame(GaussianRational(0), GaussianRational(Rational(8, 5))), Family::whittaker, {1}, 0),
                    Catch::Matchers::ContainsSubstring("< pi/2"));
  // 3.1415925 is within 2^-20 below pi
  CHECK_THROWS_WITH(build_lacunary(ExactFrame(GaussianRational(0), GaussianRational(Rational(31415925, 10000000))), Family::lidstone, {1}, 0),
                    Catch::Matchers::ContainsSubstring("2^-20"));
  CHECK_THROWS_AS(build_lacunary(unit, Family::lidstone, {1, 0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_lacunary(unit, Family::lidstone, {1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_lacunary(unit, Family::lidstone, std::vector<int>(7, 1), 6), std::invalid_argument);
}

TEST_CASE("lacunary Lidstone jets", "[series]") {
  const ExactFrame unit(GaussianRational(0), GaussianRational(1));
  const LacunarySeries s = build_lacunary(unit, Family::lidstone, {1, -1, 1, -1}, 3);
  const EntireFunction f = EntireFunction::lacunary(s);
  for (unsigned n = 0; n <= 800; n += (n < 40 ? 1 : 37)) {
    CHECK(lacunary_jet_exact(s, 0, 2 * n) == GaussianRational(0));
    CHECK(lacunary_jet_exact(s, 1, 2 * n) == GaussianRational(Rational(s.coefficient(n))));
  }
  CHECK_THROWS_AS(lacunary_jet_exact(s, 0, 1), std::domain_error);
  for (unsigned n = 0; n <= 19; ++n) {
    const EntireFunction d = f.derivative(2 * n);
    CHECK(abs(d(cx(0), 256)) < Real(1e-60, 256));
    CHECK(abs(d(cx(1), 256) - cx(s.coefficient(n))) < Real(1e-60, 256));
  }
  // the first derivative agrees with a Cauchy-integral oracle
  const Cx z0 = cx(0.4, 0.3);
  CHECK(abs(f.derivative(1)(z0, 256) - cauchy_derivative(f, z0, 0.5, 256, 256)) < Real(1e-50, 256));
}

TEST_CASE("lacunary Whittaker jets", "[series]") {
  const ExactFrame unit(GaussianRational(0), GaussianRational(1));
  const LacunarySeries s = build_lacunary(unit, Family::whittaker, {-1, 1, 1}, 2);
  const EntireFunction f = EntireFunction::lacunary(s);
  for (unsigned n = 0; n <= 60; ++n) {
    CHECK(lacunary_jet_exact(s, 0, 2 * n + 1) == GaussianRational(0));
    CHECK(lacunary_jet_exact(s, 1, 2 * n) == GaussianRational(Rational(s.coefficient(n))));
  }
  for (unsigned n = 0; n <= 57; n += 3) {
    CHECK(abs(f.derivative(2 * n + 1)(cx(0), 256)) < Real(1e-60, 256));
    CHECK(abs(f.derivative(2 * n)(cx(1), 256) - cx(s.coefficient(n))) < Real(1e-60, 256));
  }
}

TEST_CASE("lacunary growth stays under gamma on a small grid", "[series]") {
  const ExactFrame unit(GaussianRational(0), GaussianRational(1));
  const GammaFamily gf = gamma_family(unit);
  const LacunarySeries s = build_lacunary(unit, Family::lidstone, {1, 1, 1, 1, 1}, 4);
  const EntireFunction f = EntireFunction::lacunary(s);
  for (int r : {10, 20}) {
    CHECK(normalized_growth(f, Real(r, 256), 128, 256) <= *gf.gamma);
    // supports left out of the evaluation are negligible
    CHECK(lacunary_dropped_log_bound(s, 0, Real(r, 256), 256) < Real(-200, 256));
  }
}

TEST_CASE("eigenfunction jets", "[series]") {
  const Real tol = Real::pow2(-128, 256);
  for (const auto& [s0, s1] : {std::pair{cx(0), cx(1)}, std::pair{cx(0.5, -0.25), cx(-0.3, 0.6)}}) {
    const Cx a0 = cx(3), a1 = cx(-2, 0.5);
    const EntireFunction sh = EntireFunction::exponential_sum(sinh_eigenfunction(s0, s1, a0, a1));
    const EntireFunction ch = EntireFunction::exponential_sum(cosh_eigenfunction(s0, s1, a0, a1));
    for (unsigned n = 0; n <= 10; ++n) {
      CHECK(abs(sh.derivative(2 * n)(s0, 256) - a0) < tol * abs(a0));
      CHECK(abs(sh.derivative(2 * n)(s1, 256) - a1) < tol * abs(a1));
      CHECK(abs(ch.derivative(2 * n + 1)(s0, 256) - a0) < tol * abs(a0));
      CHECK(abs(ch.derivative(2 * n)(s1, 256) - a1) < tol * abs(a1));
    }
    for (unsigned l = 1; l <= 3; ++l) {
      const EntireFunction sf = EntireFunction::exponential_sum(sine_family(s0, s1, l));
      const EntireFunction cf = EntireFunction::exponential_sum(cosine_family(s0, s1, l - 1));
      for (unsigned n = 0; n <= 10; ++n) {
        // jets grow like (l pi / |s1 - s0|)^order
        const Real scale = pow(Real(4 * static_cast<long>(l), 256), 2 * static_cast<long>(n) + 1);
        CHECK(abs(sf.derivative(2 * n)(s0, 256)) < Real(1e-60, 256) * scale);
        CHECK(abs(sf.derivative(2 * n)(s1, 256)) < Real(1e-55, 256) * scale);
        CHECK(abs(cf.derivative(2 * n + 1)(s0, 256)) < Real(1e-60, 256) * scale);
        CHECK(abs(cf.derivative(2 * n)(s1, 256)) < Real(1e-55, 256) * scale);
      }
    }
  }
  // sinh(s0 - s1) = 0
  const Cx pi_i(Real(0, 256), Real::pi(256));
  CHECK_THROWS_AS(sinh_eigenfunction(cx(0), pi_i, cx(1), cx(1)), std::invalid_argument);
}

TEST_CASE("polya_example", "[series]") {
  CHECK(is_zero(polya_example({1}, cx(0))));
  CHECK(abs(polya_example({1}, cx(1)) - Cx(dec("1.5416914682540160487415778421069426398435558985489878159384"))) <
        Real(1e-58, 256));
  const Real tol = Real::pow2(-256 + 8, 256);
  CHECK(abs(polya_example({1, -1}, cx(2)) - Cx(dec("0.66031746344973858201371427252400997471723415358802507455115"))) <
        max(tol, Real(1e-58, 256)));

  const EntireFunction f = EntireFunction::polya({1, -1, -1});
  const Cx z0 = cx(1.5, -0.5);
  CHECK(abs(f.derivative(1)(z0, 256) - cauchy_derivative(f, z0, 0.5, 256, 256)) < Real(1e-50, 256));
  // f^{(2^n)}(0) = e_n
  CHECK(abs(f.derivative(4)(cx(0), 256) - cx(-1)) < tol);
  CHECK(abs(f.derivative(8)(cx(0), 256) - cx(1)) < tol);
  CHECK(is_zero(f.derivative(3)(cx(0), 256)));
  CHECK_THROWS_AS(EntireFunction::polya({2}), std::invalid_argument);
}

TEST_CASE("polya_n0", "[series]") {
  const double inv = 1 / std::sqrt(2 * M_PI);
  CHECK(polya_n0(0, 0.5 * inv) == 1);
  CHECK(polya_n0(0, 0.99 * inv) == 9);
  // forward scan oracle: (1 - 1/n)^{-n} e^{1/(12 n)} 0.1 e^{-1} first drops below 1 at n = 2
  CHECK(polya_n0(1, 0.1 * std::exp(-1.0) * inv) == 2);
  for (double A : {0.0, 0.5, 2.0, 7.5}) {
    for (double frac : {0.1, 0.5, 0.9}) {
      const double c = frac * std::exp(-A) * inv;
      const unsigned long n0 = polya_n0(A, c);
      for (unsigned long n = n0; n <= n0 + 50; ++n) CHECK(polya_chain_log_bound(A, c, n) < 0);
      if (n0 > 1) CHECK(polya_chain_log_bound(A, c, n0 - 1) >= 0);
    }
  }
  CHECK_THROWS_AS(polya_n0(0, inv), std::invalid_argument);
  CHECK_THROWS_AS(polya_n0(-1, 0.1), std::invalid_argument);
}

TEST_CASE("cauchy_derivative_bound", "[series]") {
  for (unsigned long n : {1UL, 5UL, 30UL}) {
    const Real r(static_cast<long>(n), 128);
    const Real b = cauchy_derivative_bound(r, n, r);  // e^z: log sup = r
    CHECK(b >= Real(0, 128));
  }
  CHECK(cauchy_derivative_bound(Real(3.5, 128), 0, Real(2, 128)) == Real(3.5, 128));
  CHECK(abs(cauchy_derivative_bound(Real(0, 128), 5, Real(1, 128)) - log(Real(120, 128))) < Real::pow2(-120, 128));
  CHECK_THROWS_AS(cauchy_derivative_bound(Real(0, 128), 1, Real(0, 128)), std::invalid_argument);
}

TEST_CASE("closure handles", "[series]") {
  const EntireFunction bare = EntireFunction::closure([](const Cx& z, Precision b) { return exp(with_precision(z, b)); },
                                                      nullptr, "exp closure");
  CHECK_THROWS_AS(bare.derivative(1), std::logic_error);
  const EntireFunction e = EntireFunction::closure(
      [](const Cx& z, Precision b) { return exp(with_precision(z, b)); },
      [](unsigned) {
        return EntireFunction::closure([](const Cx& z, Precision b) { return exp(with_precision(z, b)); }, nullptr,
                                       "exp");
      },
      "exp");
  CHECK(abs(e.derivative(3)(cx(1), 128) - Cx(exp(Real(1, 128)))) < Real::pow2(-120, 128));
}
