// lidstone: batch front end for the library.
//
//   lidstone poly lidstone 3
//   lidstone constants nu tau_m 3 --precision 512
//   lidstone growth lacunary lidstone 0 1 4 +++++ --r-min 10 --r-max 60 --steps 11
//   lidstone verify all --format json
//
// Exit status: 0 on success, 1 if a verify check fails, 2 on bad input.

#include "lidstone/lidstone.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace lidstone;
using json = nlohmann::ordered_json;

namespace {

struct Config {
  Precision precision = kDefaultPrecision;
  std::string format = "csv";
  std::string out;
  std::uint64_t seed = 20240611;
  unsigned samples = 256;
};

class UsageError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw UsageError("cannot write " + cfg.out);
  f << text;
}

int cmd_poly(const Config& cfg, const std::string& family_name, unsigned n_max) {
  const Family family = family_from_string(family_name);
  std::vector<const RationalPoly*> rows;
  for (unsigned n = 0; n <= n_max; ++n) rows.push_back(family == Family::lidstone ? &lidstone_poly(n) : &whittaker_poly(n));
  if (cfg.format == "json") {
    json a = json::array();
    for (unsigned n = 0; n <= n_max; ++n) {
      a.push_back({{"n", n}, {"polynomial", io::poly_to_string(*rows[n])}, {"coefficients", io::to_json(*rows[n])}});
    }
    emit(cfg, json{{"family", to_string(family)}, {"rows", a}}.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "n,polynomial,coefficients\n";
    for (unsigned n = 0; n <= n_max; ++n) {
      std::string coeffs;
      for (int i = 0; i <= rows[n]->degree(); ++i) coeffs += (i ? " " : "") + to_string(rows[n]->coefficient(i));
      os << n << ',' << io::poly_to_string(*rows[n]) << ',' << coeffs << '\n';
    }
    emit(cfg, os.str());
  }
  return 0;
}

std::vector<RealConstant> constants_from_names(const std::vector<std::string>& names, Precision bits) {
  std::vector<RealConstant> out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const std::string& n = names[i];
    if (n == "nu") {
      out.push_back(nu(bits));
    } else if (n == "log_2_plus_sqrt3") {
      out.push_back(log_2_plus_sqrt3(bits));
    } else if (n == "gamma1") {
      out.push_back(gamma1(bits));
    } else if (n == "gamma1_prime") {
      out.push_back(gamma1_prime(bits));
    } else if (n == "tau_m") {
      if (i + 1 == names.size()) throw UsageError("tau_m needs a value of m");
      unsigned long m = 0;
      try {
        m = std::stoul(names[++i]);
      } catch (const std::exception&) {
        throw UsageError("tau_m needs an integer m, got '" + names[i] + "'");
      }
      out.push_back(tau_m(static_cast<unsigned>(m), bits));
    } else if (n == "all") {
      for (const char* c : {"nu", "log_2_plus_sqrt3", "gamma1", "gamma1_prime"}) {
        auto more = constants_from_names({c}, bits);
        out.insert(out.end(), more.begin(), more.end());
      }
      for (unsigned m : {2U, 3U, 4U}) out.push_back(tau_m(m, bits));
    } else {
      throw UsageError("unknown constant '" + n + "' (expected nu, log_2_plus_sqrt3, gamma1, gamma1_prime, tau_m <m>, all)");
    }
  }
  return out;
}

int cmd_constants(const Config& cfg, const std::vector<std::string>& names) {
  const std::vector<RealConstant> cs = constants_from_names(names, cfg.precision);
  emit(cfg, cfg.format == "json" ? io::constants_json(cs).dump(2) + "\n" : io::constants_csv(cs));
  return 0;
}

int cmd_growth(const Config& cfg, const std::vector<std::string>& spec, double r_min, double r_max, unsigned steps) {
  if (!(r_min > 0) || r_max < r_min) throw UsageError("growth needs 0 < r-min <= r-max");
  if (steps < 1 || (steps == 1 && r_max != r_min)) throw UsageError("growth needs steps >= 1 (steps = 1 only when r-min = r-max)");
  const EntireFunction f = io::function_from_spec(spec, cfg.precision);
  std::vector<Real> grid;
  for (unsigned k = 0; k < steps; ++k) {
    const Real lo(r_min, cfg.precision), hi(r_max, cfg.precision);
    grid.push_back(steps == 1 ? lo : lo + (hi - lo) * static_cast<long>(k) / static_cast<long>(steps - 1));
  }
  const GrowthReport g = growth_report(f, grid, cfg.samples, cfg.precision);
  if (cfg.format == "json") {
    emit(cfg, io::to_json(g).dump(2) + "\n");
  } else {
    emit(cfg, io::growth_csv(g));
    if (!cfg.out.empty()) {
      std::ofstream meta(cfg.out + ".meta.json");
      meta << io::growth_metadata(g).dump(2) << "\n";
    }
  }
  return 0;
}

int cmd_verify(const Config& cfg, const std::vector<std::string>& names) {
  std::vector<const verify::Suite*> selected;
  for (const auto& n : names) {
    if (n == "all") {
      for (const auto& s : verify::suites()) selected.push_back(&s);
      continue;
    }
    const verify::Suite* s = verify::find_suite(n);
    if (!s) {
      std::string known;
      for (const auto& x : verify::suites()) known += " " + x.name;
      throw UsageError("unknown suite '" + n + "' (known:" + known + ", all)");
    }
    selected.push_back(s);
  }
  verify::Options opt;
  opt.bits = cfg.precision;
  opt.seed = cfg.seed;
  opt.samples = cfg.samples;

  std::vector<verify::SuiteResult> results;
  unsigned checks = 0, failed = 0;
  for (const auto* s : selected) {
    results.push_back(verify::run(*s, opt));
    checks += static_cast<unsigned>(results.back().checks.size());
    failed += results.back().failures();
    std::cerr << (results.back().pass() ? "PASS " : "FAIL ") << s->name << "\n";
  }
  const bool pass = failed == 0;
  if (cfg.format == "json") {
    json a = json::array();
    for (const auto& r : results) a.push_back(verify::to_json(r));
    json summary = {{"checks", checks}, {"passed", checks - failed}, {"failed", failed}, {"pass", pass}};
    emit(cfg, json{{"suites", a}, {"summary", summary}}.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "suite,criterion,check,pass,detail\n";
    for (const auto& r : results) {
      for (const auto& c : r.checks) {
        os << r.suite << ',' << r.criterion << ',' << io::csv_field(c.name) << ',' << (c.pass ? "true" : "false") << ','
           << io::csv_field(c.detail) << '\n';
      }
    }
    os << "summary,," << (checks - failed) << "/" << checks << "," << (pass ? "true" : "false") << ",\n";
    emit(cfg, os.str());
  }
  std::cerr << (checks - failed) << "/" << checks << " checks passed\n";
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lidstone and Whittaker two-point interpolation: tables, constants, growth and self-checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--precision", cfg.precision, "working precision in bits")->check(CLI::Range(64u, 1u << 20));
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", cfg.out, "output file (default stdout)");
  app.add_option("--seed", cfg.seed, "seed for randomized suites");
  app.add_option("--samples", cfg.samples, "circle samples for sup norms")->check(CLI::Range(64u, 1u << 24));

  std::string family;
  unsigned n_max = 0;
  auto* poly = app.add_subcommand("poly", "exact coefficient table");
  poly->add_option("family", family, "lidstone or whittaker")->required()->check(CLI::IsMember({"lidstone", "whittaker"}));
  poly->add_option("n_max", n_max, "largest index")->required()->check(CLI::Range(0u, 2000u));

  std::vector<std::string> names;
  auto* consts = app.add_subcommand("constants", "named constants with relation residuals");
  consts->add_option("names", names, "nu, log_2_plus_sqrt3, gamma1, gamma1_prime, tau_m <m>, all")->required();

  std::vector<std::string> spec;
  double r_min = 1, r_max = 10;
  unsigned steps = 10;
  auto* growth = app.add_subcommand("growth", "sup norms and normalized growth on a radius grid");
  growth->add_option("function", spec, "exp | sin l s0 s1 | lacunary family s0 s1 K signs | polya signs | expsum file")
      ->required();
  growth->add_option("--r-min", r_min, "smallest radius");
  growth->add_option("--r-max", r_max, "largest radius");
  growth->add_option("--steps", steps, "number of radii");

  std::vector<std::string> suites;
  auto* ver = app.add_subcommand("verify", "run acceptance suites");
  ver->add_option("suite", suites, "suite name or number, or all")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*poly) return cmd_poly(cfg, family, n_max);
    if (*consts) return cmd_constants(cfg, names);
    if (*growth) return cmd_growth(cfg, spec, r_min, r_max, steps);
    if (*ver) return cmd_verify(cfg, suites);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
