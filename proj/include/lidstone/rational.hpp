#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "lidstone/complex.hpp"

namespace lidstone {

// mpq_class keeps numerator and denominator reduced with a positive
// denominator after every arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;

// "p/q", with "/q" omitted when q == 1.
inline std::string to_string(Rational q) {
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational rational_from_string(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("not a rational literal: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Real& x) { return x.is_zero(); }
inline bool is_zero(long double x) { return x == 0.0L; }
template <class R>
bool is_zero(const Complex<R>& z) { return is_zero(z.re) && is_zero(z.im); }

}  // namespace lidstone
