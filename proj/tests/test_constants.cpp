#include "lidstone/constants.hpp"

#include <catch_amalgamated.hpp>

using namespace lidstone;

namespace {

bool digits_match(const Real& x, const std::string& printed) {
  return x.to_string(static_cast<int>(printed.size()) + 4).rfind(printed, 0) == 0;
}

Real dec(const char* s, Precision bits = 256) { return Real(std::string(s), bits); }

// Oracle: plain bisection to full precision, no Newton step.
Real bisect_only(const std::function<Real(const Real&)>& f, Real lo, Real hi, Precision bits) {
  const int s = f(lo).sign();
  for (Precision i = 0; i < bits + 8; ++i) {
    Real mid = ldexp(lo + hi, -1);
    if (f(mid).sign() == s) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return ldexp(lo + hi, -1);
}

}  // namespace

TEST_CASE("nu", "[constants]") {
  const RealConstant c = nu(256);
  CHECK(digits_match(c.value, "2.1773"));
  CHECK(c.within_contract());
  CHECK(c.residual < Real::pow2(-240, 256));
  CHECK(nu(64).residual < Real::pow2(-56, 64));
  // frozen from an independent 60-digit solver
  CHECK(abs(c.value - dec("2.17731898496530675263042424606013595348717961665535909023631")) < Real(1e-58, 256));

  const Real oracle = bisect_only([](const Real& x) { return ldexp(sinh(x), 1) - x * 4; }, Real(2, 320),
                                  Real(3, 320), 320);
  CHECK(abs(c.value - oracle) < Real::pow2(-256 + 16, 256));

  // The relation with a plus sign has no root near 2.1773.
  CHECK(nu_literal_relation_residual(256) > Real(0.1, 256));
}

TEST_CASE("log(2 + sqrt 3)", "[constants]") {
  const RealConstant c = log_2_plus_sqrt3(256);
  CHECK(digits_match(c.value, "1.3169578"));
  CHECK(c.within_contract());
  const Real direct = log(Real(2, 256) + sqrt(Real(3, 256)));
  CHECK(abs(c.value - direct) < Real::pow2(-248, 256));
}

TEST_CASE("gamma1 and gamma1 prime", "[constants]") {
  const RealConstant g1 = gamma1(256);
  const RealConstant g1p = gamma1_prime(256);
  CHECK(g1.within_contract());
  CHECK(g1p.within_contract());
  // frozen closed-form oracle values 1/(2 - sinh 1), 1/(2 - cosh 1)
  CHECK(abs(g1.value - dec("1.21241688554061615811702875667417515192459273350265652210446")) < Real(1e-58, 256));
  CHECK(abs(g1p.value - dec("2.1885699670348795183016614028592797821960452474538782674132")) < Real(1e-58, 256));
  CHECK(digits_match(g1p.value, "2.1885699"));
}

TEST_CASE("gamma_family", "[constants]") {
  const ExactFrame unit(GaussianRational(0), GaussianRational(1));
  const GammaFamily f = gamma_family(unit);
  REQUIRE(f.gamma2);
  CHECK(abs(*f.gamma2 - f.gamma1) < Real::pow2(-250, 256));
  REQUIRE(f.gamma2_prime);
  CHECK(abs(*f.gamma2_prime - f.gamma1_prime) < Real::pow2(-250, 256));
  REQUIRE(f.gamma4);
  REQUIRE(f.gamma4_prime);
  CHECK(abs(f.gamma4->to_double() - 2.078880) < 1e-5);
  CHECK(abs(f.gamma4_prime->to_double() - 3.513209) < 1e-5);
  REQUIRE(f.gamma);
  CHECK(abs(f.gamma->to_double() - 1.2124168855406 / std::sqrt(2 * M_PI)) < 1e-12);
  CHECK(f.violations.empty());

  const GammaFamily wide = gamma_family(ExactFrame(GaussianRational(0), GaussianRational(Rational(5, 2))));
  CHECK(!wide.gamma2);
  CHECK(!wide.gamma);
  CHECK(!wide.gamma2_prime);
  CHECK(!wide.gamma4_prime);
  CHECK(wide.gamma4);
  CHECK(wide.violations.size() == 3);

  const GammaFamily far = gamma_family(ExactFrame(GaussianRational(0), GaussianRational(4)));
  CHECK(!far.gamma4);
}

TEST_CASE("gamma3 surrogates", "[constants]") {
  // Both sups are attained on the imaginary axis, where |e^t -+ e^-t| = 2.
  const Real pi = Real::pi(256);
  CHECK(abs(gamma3_surrogate(256) - (Real(2, 256) / pi + 1)) < Real::pow2(-200, 256));
  CHECK(abs(gamma3_prime_surrogate(256) - (Real(4, 256) / pi + 1)) < Real::pow2(-200, 256));
}

TEST_CASE("tau_m", "[constants]") {
  const RealConstant t2 = tau_m(2, 256);
  CHECK(abs(t2.value - ldexp(Real::pi(256), -1)) < Real::pow2(-240, 256));
  CHECK(t2.within_contract());

  const TauResult t3 = tau_m_detailed(3, 256);
  // frozen from an independent 60-digit root finder
  CHECK(abs(t3.constant.value - dec("1.84981279919014347629432620581267048531832828454467649257668")) <
        Real(1e-58, 256));
  CHECK(t3.constant.within_contract());

  const char* frozen[] = {"2.2214414690791831235079404950303468493073108446878451115427",
                          "2.60725122805278440245517873970138432991974847601174204867297",
                          "2.99433607025793507919476571286649290609787761688082469933281",
                          "3.38015591566402052814771402720534919192341928631169368566464",
                          "3.76438716518471189476640708071369332150334978301388699126977"};
  Real previous = t3.constant.value;
  for (unsigned m = 4; m <= 8; ++m) {
    const RealConstant t = tau_m(m, 256);
    CHECK(t.within_contract());
    CHECK(abs(t.value - dec(frozen[m - 4])) < Real(1e-57, 256));
    CHECK(t.value > previous);
    previous = t.value;
  }
  const double e = std::exp(1.0);
  CHECK(previous.to_double() > 8 / e * 0.5);
  CHECK(previous.to_double() < 8 / e * 2);
  CHECK_THROWS_AS(tau_m(1, 256), std::invalid_argument);
}

TEST_CASE("stirling_check", "[constants]") {
  for (unsigned n : {1U, 2U, 10U, 100U, 500U}) {
    const auto [lower, upper] = stirling_check(n);
    CHECK(lower);
    CHECK(upper);
  }
}

TEST_CASE("Stirling lemma threshold", "[constants]") {
  const double r0 = stirling_lemma_r0();
  CHECK(r0 >= 0.25);
  CHECK(r0 < 10);
  for (double r = r0; r <= 100; r += 0.25) CHECK(stirling_lemma_margin(r) < 0);
}

TEST_CASE("stirling_corollary_check", "[constants]") {
  CHECK(stirling_corollary_check(Real(50, 256), 50));
  CHECK(stirling_corollary_check(Real(50, 256), 1));
  const double r0 = stirling_lemma_r0();
  bool all = true;
  for (double r = r0; r <= 100; r += 1.75) {
    for (unsigned N = 1; N <= 500; N += 7) all = all && stirling_corollary_check(Real(r, 128), N, 128);
  }
  CHECK(all);
}

TEST_CASE("sup bounds dominate exact sup norms", "[constants][property]") {
  const ExactFrame unit(GaussianRational(0), GaussianRational(1));
  for (unsigned n : {0U, 1U, 5U, 17U, 40U}) {
    for (double r : {1.0, 2.0, 5.0, 10.0, 20.0, 40.0, 80.0}) {
      const Real rr(r, 128);
      const double l = static_cast<double>(log_sup_scaled_lidstone_ld(n, 1.0L, r));
      const double w = static_cast<double>(log_sup_scaled_whittaker_ld(n, 1.0L, r));
      for (BoundKind k : {BoundKind::i, BoundKind::ii, BoundKind::iii}) {
        CHECK(l <= lidstone_sup_bound(unit, n, rr, k, {}, 128).to_double() + 1e-12);
        CHECK(w <= whittaker_sup_bound(unit, n, rr, k, {}, 128).to_double() + 1e-12);
      }
    }
  }
  CHECK(std::abs(lidstone_sup_bound(unit, 0, Real(1, 128), BoundKind::i, {}, 128).to_double() -
                 std::log(1.2124168855406)) < 1e-12);
  CHECK(std::abs(whittaker_sup_bound(unit, 0, Real(1, 128), BoundKind::i, {}, 128).to_double() -
                 std::log(2.1885699670349)) < 1e-12);
}

TEST_CASE("bound regimes are enforced", "[constants]") {
  const ExactFrame wide(GaussianRational(0), GaussianRational(Rational(5, 2)));
  CHECK_THROWS_AS(lidstone_sup_bound(wide, 1, Real(10, 128), BoundKind::ii), std::invalid_argument);
  CHECK_THROWS_AS(whittaker_sup_bound(wide, 1, Real(10, 128), BoundKind::ii), std::invalid_argument);
  const ExactFrame unit(GaussianRational(0), GaussianRational(1));
  BoundOptions opt;
  opt.large_r_threshold = 5.0;
  CHECK_THROWS_AS(lidstone_sup_bound(unit, 1, Real(2, 128), BoundKind::ii, opt), std::invalid_argument);
  CHECK_NOTHROW(lidstone_sup_bound(unit, 1, Real(6, 128), BoundKind::ii, opt));
}

TEST_CASE("float family tables agree with exact polynomials", "[constants][oracle]") {
  for (unsigned n = 0; n <= 30; ++n) {
    const auto l = lidstone_coefficients_ld(n);
    const auto m = whittaker_coefficients_ld(n);
    for (std::size_t i = 0; i < l.size(); ++i) {
      const long double exact = Real(lidstone_poly(n).coefficient(i), 128).to_long_double();
      CHECK(std::fabs(l[i] - exact) <= 1e-16L * std::fabs(exact));
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      const long double exact = Real(whittaker_poly(n).coefficient(i), 128).to_long_double();
      CHECK(std::fabs(m[i] - exact) <= 1e-16L * std::fabs(exact));
    }
  }
}

TEST_CASE("tail sums beyond gamma4 r", "[constants]") {
  const ExactFrame unit(GaussianRational(0), GaussianRational(1));
  const GammaFamily f = gamma_family(unit);
  for (double r : {stirling_lemma_r0(), 1.0, 10.0, 40.0, 80.0}) {
    const TailSum l = tail_sum(true, 1.0, r, f.gamma4->to_double());
    const TailSum w = tail_sum(false, 1.0, r, f.gamma4_prime->to_double());
    CHECK(l.value + l.remainder_bound < 1);
    CHECK(w.value + w.remainder_bound < 1);
  }
}
