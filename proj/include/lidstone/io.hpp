#pragma once

// JSON and CSV forms of the library's values.
//
//   rational        "p/q" (or "p" for integers)
//   real            decimal string with enough digits to round-trip
//   complex         {"re": real, "im": real}
//   polynomial      array of coefficients, constant term first
//   jets            {"scheme": ..., "entries": [{"point", "order", "value"}]}
//   exponential sum [{"c": complex, "lambda": complex}, ...]
//
// Numbers are formatted by MPFR and GMP, never through the C locale, so
// the decimal separator is always '.'.

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lidstone/constants.hpp"
#include "lidstone/expsum.hpp"
#include "lidstone/series.hpp"
#include "lidstone/twopoint.hpp"

namespace lidstone::io {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& q) { return to_string(q); }

inline json to_json(const Real& x) { return x.to_string(); }

inline json to_json(const Cx& z) { return {{"re", to_json(z.re)}, {"im", to_json(z.im)}}; }

inline json to_json(const GaussianRational& z) { return {{"re", to_json(Rational(z.re))}, {"im", to_json(Rational(z.im))}}; }

inline json to_json(const RationalPoly& p) {
  json a = json::array();
  for (int i = 0; i <= p.degree(); ++i) a.push_back(to_json(p.coefficient(i)));
  return a;
}

template <class C>
json to_json(const JetData<C>& jets) {
  json entries = json::array();
  for (const auto& [key, value] : jets.entries()) {
    entries.push_back({{"point", key.first}, {"order", key.second}, {"value", to_json(value)}});
  }
  return {{"scheme", to_string(jets.scheme())}, {"entries", entries}};
}

inline json to_json(const ExponentialSum& s) {
  json a = json::array();
  for (const auto& t : s.terms()) a.push_back({{"c", to_json(t.c)}, {"lambda", to_json(t.lambda)}});
  return a;
}

inline json to_json(const RealConstant& c) {
  return {{"name", c.name},     {"value", to_json(c.value)},       {"bits", c.bits},
          {"relation", c.relation}, {"residual", c.residual.to_string(6)}, {"within_contract", c.within_contract()}};
}

// Accepts a decimal string or a JSON number.
inline Real real_from_json(const json& j, Precision bits) {
  if (j.is_string()) return Real(j.get<std::string>(), bits);
  if (j.is_number_integer()) return Real(j.get<long>(), bits);
  if (j.is_number()) return Real(j.get<double>(), bits);
  throw std::invalid_argument("expected a real number, got " + j.dump());
}

// Accepts {"re", "im"}, a two-element array, or a real.
inline Cx complex_from_json(const json& j, Precision bits) {
  if (j.is_object()) {
    return {real_from_json(j.at("re"), bits), j.contains("im") ? real_from_json(j.at("im"), bits) : Real(0, bits)};
  }
  if (j.is_array() && j.size() == 2) return {real_from_json(j[0], bits), real_from_json(j[1], bits)};
  return {real_from_json(j, bits), Real(0, bits)};
}

inline ExponentialSum expsum_from_json(const json& j, Precision bits) {
  if (!j.is_array()) throw std::invalid_argument("exponential sum must be a JSON array of {c, lambda}");
  std::vector<ExpTerm> terms;
  for (const auto& t : j) terms.push_back({complex_from_json(t.at("c"), bits), complex_from_json(t.at("lambda"), bits)});
  return ExponentialSum(std::move(terms));
}

inline ExponentialSum read_expsum_file(const std::string& path, Precision bits) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return expsum_from_json(json::parse(in), bits);
}

// --- text forms ----------------------------------------------------------------

// "1/6 z^3 - 1/6 z"; "0" for the zero polynomial.
inline std::string poly_to_string(const RationalPoly& p, const std::string& var = "z") {
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coefficient(i);
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = c == 1;
    if (!unit || i == 0) out += to_string(c);
    if (i > 0) {
      if (!unit) out += " ";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

// Exact value of "p/q" or a decimal such as "-1.25e-3".
inline Rational rational_from_decimal(const std::string& s) {
  if (s.find('/') != std::string::npos) return rational_from_string(s);
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = s[i++] == '-';
  std::string digits;
  long scale = 0;
  bool dot = false, any = false;
  for (; i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.'); ++i) {
    if (s[i] == '.') {
      if (dot) throw std::invalid_argument("not a number: '" + s + "'");
      dot = true;
      continue;
    }
    digits += s[i];
    any = true;
    if (dot) --scale;
  }
  if (!any) throw std::invalid_argument("not a number: '" + s + "'");
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(s.substr(i + 1), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a number: '" + s + "'");
    }
    if (used != s.size() - i - 1 || e > 10000 || e < -10000) throw std::invalid_argument("not a number: '" + s + "'");
    scale += e;
    i = s.size();
  }
  if (i != s.size()) throw std::invalid_argument("not a number: '" + s + "'");
  BigInt num(digits, 10), ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  Rational q = scale < 0 ? Rational(num, ten_pow) : Rational(num * ten_pow);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

// Exact complex literal: "a", "bi", "a+bi", "a-bi", "i", "-i"; a and b as
// accepted by rational_from_decimal.
inline GaussianRational gaussian_from_string(const std::string& text) {
  const std::string s = text;
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  if (s.back() != 'i') return {rational_from_decimal(s), Rational(0)};
  const std::string body = s.substr(0, s.size() - 1);
  // split before the last sign that is not the leading one or an exponent sign
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : body.substr(0, split);
  std::string im = split == std::string::npos ? body : body.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? Rational(0) : rational_from_decimal(re), rational_from_decimal(im)};
}

// "+-+", "1,-1,1" or "1 -1 1" (one sign per e_n).
inline std::vector<int> signs_from_string(const std::string& s) {
  std::vector<int> out;
  if (!s.empty() && s.find_first_not_of("+-") == std::string::npos) {
    for (char c : s) out.push_back(c == '+' ? 1 : -1);
    return out;
  }
  std::string token;
  std::istringstream in(s);
  while (std::getline(in, token, ',')) {
    std::istringstream words(token);
    std::string w;
    while (words >> w) {
      if (w == "1" || w == "+1" || w == "+") {
        out.push_back(1);
      } else if (w == "-1" || w == "-") {
        out.push_back(-1);
      } else {
        throw std::invalid_argument("signs must be +1 or -1, got '" + w + "'");
      }
    }
  }
  if (out.empty()) throw std::invalid_argument("empty sign list");
  return out;
}

// Function specs, one token per word:
//   exp
//   sin <l> <s0> <s1>                      sin(l pi (z - s0)/(s1 - s0))
//   lacunary <family> <s0> <s1> <K> <signs>
//   polya <signs>
//   expsum <file.json>
inline EntireFunction function_from_spec(const std::vector<std::string>& words, Precision bits) {
  auto fail = [&](const std::string& why) -> EntireFunction {
    throw std::invalid_argument("bad function spec: " + why +
                                " (expected exp | sin l s0 s1 | lacunary family s0 s1 K signs | polya signs | expsum file)");
  };
  if (words.empty()) return fail("empty");
  const std::string& head = words[0];
  std::string joined;
  for (const auto& w : words) joined += (joined.empty() ? "" : " ") + w;
  if (head == "exp") {
    if (words.size() != 1) return fail("exp takes no arguments");
    const Cx one(Real(1, bits));
    return EntireFunction::exponential_sum(ExponentialSum({{one, one}}), "exp");
  }
  if (head == "sin") {
    if (words.size() != 4) return fail("sin needs l s0 s1");
    const unsigned long l = std::stoul(words[1]);
    return EntireFunction::exponential_sum(
        sine_family(to_cx(gaussian_from_string(words[2]), bits), to_cx(gaussian_from_string(words[3]), bits),
                    static_cast<unsigned>(l)),
        joined);
  }
  if (head == "lacunary") {
    if (words.size() != 6) return fail("lacunary needs family s0 s1 K signs");
    const ExactFrame frame(gaussian_from_string(words[2]), gaussian_from_string(words[3]), bits);
    const unsigned long K = std::stoul(words[4]);
    return EntireFunction::lacunary(
        build_lacunary(frame, family_from_string(words[1]), signs_from_string(words[5]), static_cast<unsigned>(K), bits),
        joined);
  }
  if (head == "polya") {
    if (words.size() != 2) return fail("polya needs one sign list");
    return EntireFunction::polya(signs_from_string(words[1]), joined);
  }
  if (head == "expsum") {
    if (words.size() != 2) return fail("expsum needs a file name");
    return EntireFunction::exponential_sum(read_expsum_file(words[1], bits), joined);
  }
  return fail("unknown function '" + head + "'");
}

inline EntireFunction function_from_spec(const std::string& spec, Precision bits) {
  std::istringstream in(spec);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return function_from_spec(words, bits);
}

// --- growth reports ----------------------------------------------------------

inline std::string growth_csv(const GrowthReport& g, int digits = 30) {
  std::ostringstream os;
  os << "r,log_sup,normalized\n";
  for (std::size_t i = 0; i < g.r_grid.size(); ++i) {
    os << g.r_grid[i].to_string(digits) << ',' << g.log_sup_norm[i].to_string(digits) << ','
       << g.normalized[i].to_string(digits) << '\n';
  }
  return os.str();
}

inline json growth_metadata(const GrowthReport& g) {
  return {{"function", g.description},
          {"precision", g.bits},
          {"samples", g.samples},
          {"type_estimate", to_json(g.type_estimate)},
          {"columns", {"r", "log_sup", "normalized"}}};
}

inline json to_json(const GrowthReport& g) {
  json rows = json::array();
  for (std::size_t i = 0; i < g.r_grid.size(); ++i) {
    rows.push_back({{"r", to_json(g.r_grid[i])}, {"log_sup", to_json(g.log_sup_norm[i])}, {"normalized", to_json(g.normalized[i])}});
  }
  json out = growth_metadata(g);
  out["rows"] = rows;
  return out;
}

// --- constants table ---------------------------------------------------------

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string constants_csv(const std::vector<RealConstant>& cs) {
  std::ostringstream os;
  os << "name,value,bits,relation,residual,within_contract\n";
  for (const auto& c : cs) {
    os << csv_field(c.name) << ',' << c.value.to_string() << ',' << c.bits << ',' << csv_field(c.relation) << ','
       << c.residual.to_string(6) << ',' << (c.within_contract() ? "true" : "false") << '\n';
  }
  return os.str();
}

inline json constants_json(const std::vector<RealConstant>& cs) {
  json a = json::array();
  for (const auto& c : cs) a.push_back(to_json(c));
  return a;
}

}  // namespace lidstone::io
