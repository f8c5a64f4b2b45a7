#include "lidstone/io.hpp"
#include "lidstone/verify.hpp"

#include <catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

using namespace lidstone;
using namespace lidstone::io;

namespace {

Cx cx(double re, double im = 0, Precision bits = 256) { return {Real(re, bits), Real(im, bits)}; }

GaussianRational gr(const char* re, const char* im = "0") { return {rational_from_string(re), rational_from_string(im)}; }

}  // namespace

TEST_CASE("poly_to_string", "[io]") {
  CHECK(poly_to_string(lidstone_poly(0)) == "z");
  CHECK(poly_to_string(lidstone_poly(1)) == "1/6 z^3 - 1/6 z");
  CHECK(poly_to_string(whittaker_poly(1)) == "1/2 z^2 - 1/2");
  CHECK(poly_to_string(RationalPoly()) == "0");
  CHECK(poly_to_string(RationalPoly(std::vector<Rational>{Rational(0), Rational(-1)})) == "-z");
}

TEST_CASE("rational_from_decimal", "[io]") {
  CHECK(rational_from_decimal("0.5") == Rational(1, 2));
  CHECK(rational_from_decimal("-1.25e-3") == Rational(-1, 800));
  CHECK(rational_from_decimal("3e2") == Rational(300));
  CHECK(rational_from_decimal("7/21") == Rational(1, 3));
  CHECK(rational_from_decimal(".75") == Rational(3, 4));
  for (const char* bad : {"", "-", "1.2.3", "1e", "abc", "2x", "1e+"}) {
    CHECK_THROWS_AS(rational_from_decimal(bad), std::invalid_argument);
  }
}

TEST_CASE("gaussian_from_string", "[io]") {
  CHECK(gaussian_from_string("1") == gr("1"));
  CHECK(gaussian_from_string("i") == gr("0", "1"));
  CHECK(gaussian_from_string("-i") == gr("0", "-1"));
  CHECK(gaussian_from_string("2.5i") == gr("0", "5/2"));
  CHECK(gaussian_from_string("1/2-3/4i") == gr("1/2", "-3/4"));
  CHECK(gaussian_from_string("-1+i") == gr("-1", "1"));
  CHECK(gaussian_from_string("1e-1+2e+1i") == gr("1/10", "20"));
  CHECK_THROWS_AS(gaussian_from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(gaussian_from_string("1+ji"), std::invalid_argument);
}

TEST_CASE("signs_from_string", "[io]") {
  CHECK(signs_from_string("+-+") == std::vector<int>{1, -1, 1});
  CHECK(signs_from_string("1,-1,1") == std::vector<int>{1, -1, 1});
  CHECK(signs_from_string("1 -1") == std::vector<int>{1, -1});
  CHECK_THROWS_AS(signs_from_string("2"), std::invalid_argument);
  CHECK_THROWS_AS(signs_from_string(""), std::invalid_argument);
}

TEST_CASE("JSON round trips", "[io]") {
  const Real x = Real::pi(256);
  CHECK(abs(real_from_json(to_json(x), 256) - x) < Real::pow2(-250, 256));
  const Cx z = cx(1.5, -0.25);
  CHECK(abs(complex_from_json(to_json(z), 256) - z) < Real::pow2(-250, 256));
  CHECK(abs(complex_from_json(json::array({1, 2}), 256) - cx(1, 2)) < Real::pow2(-250, 256));

  const ExponentialSum s({{cx(2), cx(1)}, {cx(0, 1), cx(-1, 0.5)}});
  const ExponentialSum back = expsum_from_json(to_json(s), 256);
  for (const Cx& w : {cx(0.3), cx(-1, 2)}) CHECK(abs(back(w) - s(w)) < Real::pow2(-240, 256));
  CHECK_THROWS_AS(expsum_from_json(json::object(), 256), std::invalid_argument);
  CHECK_THROWS_AS(real_from_json(json("x1"), 256), std::invalid_argument);

  CHECK(to_json(Rational(-3, 6)) == "-1/2");
  const json jets = to_json(expand_even(ExactFrame(GaussianRational(0), GaussianRational(1)),
                                        ComplexPoly<GaussianRational>({gr("0"), gr("0"), gr("0"), gr("1")})));
  CHECK(jets.at("scheme") == "even_even");
  // orders 0 and 2 at both points; f''(1) = 6
  REQUIRE(jets.at("entries").size() == 4);
  CHECK(jets.at("entries").back() == json{{"point", 1}, {"order", 2}, {"value", {{"re", "6"}, {"im", "0"}}}});
}

TEST_CASE("function_from_spec", "[io]") {
  const EntireFunction e = function_from_spec("exp", 256);
  CHECK(abs(e(cx(1), 256) - Cx(exp(Real(1, 256)))) < Real::pow2(-240, 256));

  const EntireFunction s = function_from_spec("sin 2 0 1", 256);
  const Cx z = cx(0.3, 0.1);
  CHECK(abs(s(z, 256) - sin(z * ldexp(Real::pi(256), 1))) < Real::pow2(-230, 256));

  const EntireFunction l = function_from_spec("lacunary lidstone 0 1 2 +-+", 256);
  const EntireFunction ref =
      EntireFunction::lacunary(build_lacunary(ExactFrame(GaussianRational(0), GaussianRational(1)), Family::lidstone, {1, -1, 1}, 2));
  CHECK(abs(l(z, 256) - ref(z, 256)) < Real::pow2(-240, 256));
  CHECK(l.description() == "lacunary lidstone 0 1 2 +-+");

  const EntireFunction p = function_from_spec("polya 1,-1", 256);
  CHECK(abs(p(cx(2), 256) - polya_example({1, -1}, cx(2))) < Real::pow2(-240, 256));

  const std::string path = "test_io_expsum.json";
  {
    std::ofstream f(path);
    f << R"([{"c": {"re": "0.5", "im": 0}, "lambda": [1, 0]}, {"c": "0.5", "lambda": "-1"}])";
  }
  const EntireFunction c = function_from_spec("expsum " + path, 256);
  CHECK(abs(c(z, 256) - cosh(z)) < Real::pow2(-240, 256));
  std::remove(path.c_str());

  for (const char* bad : {"", "banana", "exp 1", "sin 1 0", "lacunary lidstone 0 1 4", "polya", "polya 3",
                          "lacunary lidstone 0 4 0 +", "expsum /nonexistent/file.json"}) {
    CHECK_THROWS_AS(function_from_spec(bad, 256), std::invalid_argument);
  }
}

TEST_CASE("CSV output", "[io]") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  const std::string csv = constants_csv({gamma1(128)});
  CHECK(csv.rfind("name,value,bits,relation,residual,within_contract\n", 0) == 0);
  CHECK(csv.find("gamma1,1.2124168855") != std::string::npos);
  CHECK(csv.find(",true\n") != std::string::npos);

  const EntireFunction e = function_from_spec("exp", 128);
  const GrowthReport g = growth_report(e, {Real(1, 128), Real(4, 128)}, 64, 128);
  const std::string rows = growth_csv(g, 10);
  CHECK(rows == "r,log_sup,normalized\n1.000000000,1.000000000,1.000000000\n4.000000000,4.000000000,2.000000000\n");
  CHECK(growth_metadata(g).at("function") == "exp");
}

TEST_CASE("verify suite lookup", "[io][verify]") {
  CHECK(verify::suites().size() == 12);
  CHECK(verify::find_suite("deltas")->criterion == 2);
  CHECK(verify::find_suite("8")->name == "lacunary");
  CHECK(verify::find_suite("08")->name == "lacunary");
  CHECK(verify::find_suite("13") == nullptr);
  CHECK(verify::find_suite("nope") == nullptr);
  const verify::SuiteResult r = verify::run(*verify::find_suite("tables"), {});
  CHECK(r.pass());
  CHECK(verify::to_json(r).at("checks").size() == 7);
  // a suite that throws becomes a single failing check
  const verify::Suite broken{"broken", 0, [](const verify::Options&) -> verify::SuiteResult {
                               throw std::runtime_error("boom");
                             }};
  const verify::SuiteResult b = verify::run(broken, {});
  CHECK(!b.pass());
  CHECK(b.checks.at(0).detail == "boom");
}
