#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "lidstone/rational.hpp"

namespace lidstone {

// Dense univariate polynomial, coefficients in ascending degree.
//
// The zero polynomial has no coefficients and degree -1; every other value
// has a nonzero leading coefficient.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }
  static Polynomial monomial(std::size_t degree, T c) {
    std::vector<T> v(degree + 1);
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<T>& coefficients() const { return coeffs_; }
  T coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T{}; }
  const T& leading() const { return coeffs_.back(); }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    for (auto& c : coeffs_) c = c * s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  // k-th derivative; the derivative of a constant is the zero polynomial.
  Polynomial derivative(unsigned k = 1) const {
    if (static_cast<int>(k) > degree()) return {};
    std::vector<T> out(coeffs_.size() - k);
    for (std::size_t i = k; i < coeffs_.size(); ++i) {
      // falling factorial i (i-1) ... (i-k+1)
      T c = coeffs_[i];
      for (std::size_t j = 0; j < k; ++j) c = c * T(static_cast<long>(i - j));
      out[i - k] = c;
    }
    return Polynomial(std::move(out));
  }

  // Horner evaluation.
  T operator()(const T& x) const {
    T acc{};
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  // p(a z + b), by Horner's scheme on polynomials.
  Polynomial compose_affine(const T& a, const T& b) const {
    Polynomial lin(std::vector<T>{b, a});
    Polynomial acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * lin + Polynomial::constant(coeffs_[i]);
    return acc;
  }

  // Coefficient-wise conversion.
  template <class U, class F>
  Polynomial<U> map(F&& f) const {
    std::vector<U> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return Polynomial<U>(std::move(out));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && lidstone::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using RationalPoly = Polynomial<Rational>;

}  // namespace lidstone
