#pragma once

// Exact Lidstone and Whittaker polynomial sequences.
//
//   Lidstone   L_0(z) = z,  L_n'' = L_{n-1},  L_n(0) = L_n(1) = 0
//   Whittaker  M_0(z) = 1,  M_n'' = M_{n-1},  M_n'(0) = M_n(1) = 0
//
// Both are generated from the triangular recurrences
//   L_n(z) = z^{2n+1}/(2n+1)! - sum_{h<n} L_h(z)/(2n-2h+1)!
//   M_n(z) = z^{2n}/(2n)!     - sum_{h<n} M_h(z)/(2n-2h)!
// and memoised. The caches are append-only deques guarded by a mutex, so
// references handed out stay valid and concurrent first use is safe.

#include <cstddef>
#include <deque>
#include <mutex>
#include <utility>
#include <vector>

#include "lidstone/polynomial.hpp"

namespace lidstone {

namespace detail {

template <class T, class Make>
class MemoSequence {
 public:
  explicit MemoSequence(Make make) : make_(std::move(make)) {}

  const T& get(std::size_t n) {
    std::lock_guard<std::mutex> lock(mutex_);
    while (items_.size() <= n) items_.push_back(make_(items_, items_.size()));
    return items_[n];
  }

 private:
  Make make_;
  std::deque<T> items_;
  std::mutex mutex_;
};

template <class T, class Make>
MemoSequence<T, Make> make_memo(Make make) {
  return MemoSequence<T, Make>(std::move(make));
}

}  // namespace detail

inline const BigInt& factorial(unsigned n) {
  static auto memo = detail::make_memo<BigInt>([](const std::deque<BigInt>& prev, std::size_t k) {
    return k == 0 ? BigInt(1) : BigInt(prev[k - 1] * static_cast<unsigned long>(k));
  });
  return memo.get(n);
}

inline Rational inverse_factorial(unsigned n) { return Rational(BigInt(1), factorial(n)); }

inline const RationalPoly& lidstone_poly(unsigned n) {
  static auto memo = detail::make_memo<RationalPoly>([](const std::deque<RationalPoly>& prev, std::size_t k) {
    auto n2 = static_cast<unsigned>(2 * k);
    RationalPoly p = RationalPoly::monomial(n2 + 1, inverse_factorial(n2 + 1));
    for (std::size_t h = 0; h < k; ++h) {
      p -= prev[h] * inverse_factorial(static_cast<unsigned>(n2 - 2 * h + 1));
    }
    return p;
  });
  return memo.get(n);
}

inline const RationalPoly& whittaker_poly(unsigned n) {
  static auto memo = detail::make_memo<RationalPoly>([](const std::deque<RationalPoly>& prev, std::size_t k) {
    auto n2 = static_cast<unsigned>(2 * k);
    RationalPoly p = RationalPoly::monomial(n2, inverse_factorial(n2));
    for (std::size_t h = 0; h < k; ++h) {
      p -= prev[h] * inverse_factorial(static_cast<unsigned>(n2 - 2 * h));
    }
    return p;
  });
  return memo.get(n);
}

inline RationalPoly poly_derivative(const RationalPoly& p, unsigned k) { return p.derivative(k); }

inline Rational eval_exact(const RationalPoly& p, const Rational& x) { return p(x); }

using RationalMatrix = std::vector<std::vector<Rational>>;

// Exact determinant by fraction-field Gaussian elimination.
inline Rational exact_determinant(RationalMatrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(a[r][col]) == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

struct LidstoneBasis {
  // matrix[i][j] = coefficient of z^i in the j-th basis polynomial, with
  // basis order L_0(z), ..., L_n(z), L_0(1-z), ..., L_n(1-z).
  RationalMatrix matrix;
  Rational determinant;
};

inline LidstoneBasis lidstone_basis_matrix(unsigned n) {
  const std::size_t size = 2 * static_cast<std::size_t>(n) + 2;
  LidstoneBasis out;
  out.matrix.assign(size, std::vector<Rational>(size));
  for (unsigned h = 0; h <= n; ++h) {
    const RationalPoly& p = lidstone_poly(h);
    RationalPoly reflected = p.compose_affine(Rational(-1), Rational(1));
    for (std::size_t i = 0; i < size; ++i) {
      out.matrix[i][h] = p.coefficient(i);
      out.matrix[i][n + 1 + h] = reflected.coefficient(i);
    }
  }
  out.determinant = exact_determinant(out.matrix);
  return out;
}

}  // namespace lidstone
