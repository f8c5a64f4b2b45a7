#pragma once

// Two-point frames, scaled Lidstone/Whittaker families and polynomial
// expansion in two-point derivative data.
//
// With g = s1 - s0,
//   scaled Lidstone   g^{2n} L_n(z/g):  second derivative is the n-1 member,
//                     zero at 0 and at g
//   scaled Whittaker  g^{2n} M_n(z/g):  derivative zero at 0, zero at g
//
// A polynomial f is recovered from its even jets at s0, s1 by
//   f(z) = sum_n f^{(2n)}(s1) Ls_n(z - s0) - f^{(2n)}(s0) Ls_n(z - s1)
// and from odd jets at s0 plus even jets at s1 by
//   f(z) = sum_n f^{(2n)}(s1) Ms_n(z - s0) + f^{(2n+1)}(s0) Ms'_{n+1}(z - s1).
// The signs are the ones under which reconstruct(expand(f)) = f; see
// sign_convention_self_test.
//
// The coefficient field C is either GaussianRational (exact end to end) or
// Cx (MPFR complex at the frame's working precision).

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "lidstone/complex.hpp"
#include "lidstone/exactpoly.hpp"
#include "lidstone/polynomial.hpp"
#include "lidstone/thresholds.hpp"

namespace lidstone {

template <class C>
struct FieldTraits;

template <>
struct FieldTraits<GaussianRational> {
  static constexpr bool exact = true;
  static GaussianRational from_rational(const Rational& q, Precision) { return {q, Rational(0)}; }
  static Real modulus(const GaussianRational& z, Precision bits) { return sqrt(Real(norm(z), bits)); }
  static Precision precision(const GaussianRational&, Precision fallback) { return fallback; }
};

template <>
struct FieldTraits<Cx> {
  static constexpr bool exact = false;
  static Cx from_rational(const Rational& q, Precision bits) { return {Real(q, bits), Real(0, bits)}; }
  static Real modulus(const Cx& z, Precision) { return abs(z); }
  static Precision precision(const Cx& z, Precision) { return precision_of(z); }
};

template <class C>
using ComplexPoly = Polynomial<C>;

template <class C>
class TwoPointFrame {
 public:
  // `bits` is the precision used for the gap modulus and the threshold
  // comparisons when the endpoints are exact.
  TwoPointFrame(C s0, C s1, Precision bits = kDefaultPrecision) : s0_(std::move(s0)), s1_(std::move(s1)) {
    gap_ = s1_ - s0_;
    if (is_zero(gap_)) throw std::invalid_argument("two-point frame needs s0 != s1");
    bits_ = std::max<Precision>(kMinPrecision, FieldTraits<C>::precision(gap_, bits));
    gap_modulus_ = FieldTraits<C>::modulus(gap_, bits_);
    const Real pi = Real::pi(bits_);
    even_regime_ = gap_modulus_ < nu_value(bits_);
    oddeven_regime_ = gap_modulus_ < log_2_plus_sqrt3_value(bits_);
    lidstone_tail_ = gap_modulus_ < pi;
    whittaker_tail_ = gap_modulus_ < ldexp(pi, -1);
  }

  const C& s0() const { return s0_; }
  const C& s1() const { return s1_; }
  const C& gap() const { return gap_; }
  const Real& gap_modulus() const { return gap_modulus_; }
  Precision bits() const { return bits_; }

  // |g| < nu
  bool even_regime() const { return even_regime_; }
  // |g| < log(2 + sqrt 3)
  bool oddeven_regime() const { return oddeven_regime_; }
  // |g| < pi
  bool lidstone_tail() const { return lidstone_tail_; }
  // |g| < pi/2
  bool whittaker_tail() const { return whittaker_tail_; }

  C from_rational(const Rational& q) const { return FieldTraits<C>::from_rational(q, bits_); }

 private:
  C s0_, s1_, gap_;
  Precision bits_ = kDefaultPrecision;
  Real gap_modulus_;
  bool even_regime_ = false, oddeven_regime_ = false, lidstone_tail_ = false, whittaker_tail_ = false;
};

using ExactFrame = TwoPointFrame<GaussianRational>;
using FloatFrame = TwoPointFrame<Cx>;

enum class JetScheme { even_even, odd_even };

inline std::string to_string(JetScheme s) { return s == JetScheme::even_even ? "even_even" : "odd_at_s0_even_at_s1"; }

inline JetScheme jet_scheme_from_string(const std::string& s) {
  if (s == "even_even") return JetScheme::even_even;
  if (s == "odd_at_s0_even_at_s1" || s == "odd_even") return JetScheme::odd_even;
  throw std::invalid_argument("unknown jet scheme '" + s + "'");
}

// Finite map (point, order) -> value. Absent entries read as zero.
template <class C>
class JetData {
 public:
  using Key = std::pair<int, unsigned>;

  explicit JetData(JetScheme scheme) : scheme_(scheme) {}

  JetScheme scheme() const { return scheme_; }
  const std::map<Key, C>& entries() const { return entries_; }

  static bool allowed(JetScheme scheme, int point, unsigned order) {
    if (point != 0 && point != 1) return false;
    if (scheme == JetScheme::even_even || point == 1) return order % 2 == 0;
    return order % 2 == 1;
  }

  void set(int point, unsigned order, C value) {
    if (!allowed(scheme_, point, order)) {
      throw std::invalid_argument("jet (" + std::to_string(point) + ", " + std::to_string(order) +
                                  ") does not fit scheme " + to_string(scheme_));
    }
    entries_[{point, order}] = std::move(value);
  }

  C get(int point, unsigned order) const {
    auto it = entries_.find({point, order});
    return it == entries_.end() ? C{} : it->second;
  }

  unsigned max_order() const {
    unsigned m = 0;
    for (const auto& [key, value] : entries_) m = std::max(m, key.second);
    return m;
  }

  friend bool operator==(const JetData& a, const JetData& b) {
    if (a.scheme_ != b.scheme_) return false;
    // Compare as finitely supported maps: a missing key equals zero.
    for (const auto& [key, value] : a.entries_) {
      if (!(b.get(key.first, key.second) == value)) return false;
    }
    for (const auto& [key, value] : b.entries_) {
      if (!(a.get(key.first, key.second) == value)) return false;
    }
    return true;
  }

 private:
  JetScheme scheme_;
  std::map<Key, C> entries_;
};

// Exact conversion of a rational polynomial into the frame's field.
template <class C>
ComplexPoly<C> lift(const TwoPointFrame<C>& frame, const RationalPoly& p) {
  return p.template map<C>([&](const Rational& q) { return frame.from_rational(q); });
}

template <class C>
ComplexPoly<C> scaled_lidstone(const TwoPointFrame<C>& frame, unsigned n) {
  // coefficient of z^{2j+1} is a_j g^{2n-2j-1}
  const RationalPoly& base = lidstone_poly(n);
  const C& g = frame.gap();
  const C g2 = g * g;
  std::vector<C> out(2 * static_cast<std::size_t>(n) + 2);
  C power = C(1) / g;  // g^{-1}, then g^1, g^3, ...
  for (unsigned j = n + 1; j-- > 0;) {
    out[2 * j + 1] = frame.from_rational(base.coefficient(2 * j + 1)) * power;
    power = power * g2;
  }
  return ComplexPoly<C>(std::move(out));
}

template <class C>
ComplexPoly<C> scaled_whittaker(const TwoPointFrame<C>& frame, unsigned n) {
  // coefficient of z^{2j} is b_j g^{2n-2j}
  const RationalPoly& base = whittaker_poly(n);
  const C g2 = frame.gap() * frame.gap();
  std::vector<C> out(2 * static_cast<std::size_t>(n) + 1);
  C power = C(1);
  for (unsigned j = n + 1; j-- > 0;) {
    out[2 * j] = frame.from_rational(base.coefficient(2 * j)) * power;
    power = power * g2;
  }
  return ComplexPoly<C>(std::move(out));
}

// p(z - a)
template <class C>
ComplexPoly<C> shift(const ComplexPoly<C>& p, const C& a) {
  return p.compose_affine(C(1), C{} - a);
}

template <class C>
JetData<C> expand_even(const TwoPointFrame<C>& frame, const ComplexPoly<C>& f) {
  JetData<C> jets(JetScheme::even_even);
  ComplexPoly<C> d = f;
  for (unsigned k = 0; static_cast<int>(k) <= std::max(f.degree(), 0); k += 2) {
    jets.set(0, k, d(frame.s0()));
    jets.set(1, k, d(frame.s1()));
    d = d.derivative(2);
  }
  return jets;
}

template <class C>
JetData<C> expand_odd_even(const TwoPointFrame<C>& frame, const ComplexPoly<C>& f) {
  JetData<C> jets(JetScheme::odd_even);
  ComplexPoly<C> d = f;
  for (unsigned k = 0; static_cast<int>(k) <= std::max(f.degree(), 0); k += 2) {
    jets.set(1, k, d(frame.s1()));
    ComplexPoly<C> d1 = d.derivative(1);
    if (static_cast<int>(k + 1) <= std::max(f.degree(), 1)) jets.set(0, k + 1, d1(frame.s0()));
    d = d1.derivative(1);
  }
  return jets;
}

template <class C>
ComplexPoly<C> reconstruct_even(const TwoPointFrame<C>& frame, const JetData<C>& jets) {
  if (jets.scheme() != JetScheme::even_even) {
    throw std::invalid_argument("reconstruct_even needs even_even jets, got " + to_string(jets.scheme()));
  }
  ComplexPoly<C> f;
  for (unsigned n = jets.max_order() / 2 + 1; n-- > 0;) {
    const C at_s1 = jets.get(1, 2 * n);
    const C at_s0 = jets.get(0, 2 * n);
    if (is_zero(at_s1) && is_zero(at_s0)) continue;
    const ComplexPoly<C> base = scaled_lidstone(frame, n);
    if (!is_zero(at_s1)) f += shift(base, frame.s0()) * at_s1;
    if (!is_zero(at_s0)) f -= shift(base, frame.s1()) * at_s0;
  }
  return f;
}

template <class C>
ComplexPoly<C> reconstruct_odd_even(const TwoPointFrame<C>& frame, const JetData<C>& jets) {
  if (jets.scheme() != JetScheme::odd_even) {
    throw std::invalid_argument("reconstruct_odd_even needs odd_at_s0_even_at_s1 jets, got " +
                                to_string(jets.scheme()));
  }
  ComplexPoly<C> f;
  for (unsigned n = jets.max_order() / 2 + 1; n-- > 0;) {
    const C at_s1 = jets.get(1, 2 * n);
    const C at_s0 = jets.get(0, 2 * n + 1);
    if (!is_zero(at_s1)) f += shift(scaled_whittaker(frame, n), frame.s0()) * at_s1;
    if (!is_zero(at_s0)) f += shift(scaled_whittaker(frame, n + 1).derivative(1), frame.s1()) * at_s0;
  }
  return f;
}

// Round trip on every monomial of degree <= 5 in the frame (0, 1), both
// schemes. Fails loudly if the summation signs above are ever changed.
inline bool sign_convention_self_test() {
  const ExactFrame frame(GaussianRational(0), GaussianRational(1));
  for (std::size_t d = 0; d <= 5; ++d) {
    const auto f = ComplexPoly<GaussianRational>::monomial(d, GaussianRational(1));
    if (!(reconstruct_even(frame, expand_even(frame, f)) == f)) return false;
    if (!(reconstruct_odd_even(frame, expand_odd_even(frame, f)) == f)) return false;
  }
  return true;
}

}  // namespace lidstone
