#pragma once

// Dense complex linear algebra for the small systems of the periodic
// interpolation problem (m <= a dozen): LU with partial pivoting,
// determinant, solve, 1-norm condition estimate and a smallest-singular
// direction by inverse iteration.

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lidstone/complex.hpp"

namespace lidstone {

inline Real unit_roundoff(const Real& x) { return Real::pow2(-static_cast<long>(x.bits()), x.bits()); }
inline long double unit_roundoff(long double) { return std::numeric_limits<long double>::epsilon(); }

template <class C>
using Matrix = std::vector<std::vector<C>>;

template <class C>
using Vector = std::vector<C>;

template <class C>
Matrix<C> transpose(const Matrix<C>& a) {
  Matrix<C> t(a.empty() ? 0 : a[0].size(), std::vector<C>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  }
  return t;
}

template <class C>
Vector<C> multiply(const Matrix<C>& a, const Vector<C>& x) {
  Vector<C> y(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    C acc{};
    for (std::size_t j = 0; j < x.size(); ++j) acc += a[i][j] * x[j];
    y[i] = acc;
  }
  return y;
}

template <class C>
auto vector_max_abs(const Vector<C>& x) {
  decltype(abs(x[0])) m = abs(x[0]);
  for (const auto& v : x) {
    auto a = abs(v);
    if (m < a) m = a;
  }
  return m;
}

// PA = LU, L unit lower triangular, stored in place.
template <class C>
class LU {
 public:
  explicit LU(Matrix<C> a) : lu_(std::move(a)), perm_(lu_.size()) {
    const std::size_t n = lu_.size();
    for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      auto best = abs(lu_[col][col]);
      for (std::size_t r = col + 1; r < n; ++r) {
        auto v = abs(lu_[r][col]);
        if (best < v) {
          best = v;
          pivot = r;
        }
      }
      if (pivot != col) {
        std::swap(lu_[pivot], lu_[col]);
        std::swap(perm_[pivot], perm_[col]);
        swaps_ ^= 1;
      }
      if (is_zero(lu_[col][col])) {
        singular_ = true;
        continue;
      }
      for (std::size_t r = col + 1; r < n; ++r) {
        C f = lu_[r][col] / lu_[col][col];
        lu_[r][col] = f;
        for (std::size_t c = col + 1; c < n; ++c) lu_[r][c] -= f * lu_[col][c];
      }
    }
  }

  bool singular() const { return singular_; }
  std::size_t size() const { return lu_.size(); }

  C determinant() const {
    C d(1);
    for (std::size_t i = 0; i < lu_.size(); ++i) d = d * lu_[i][i];
    return swaps_ ? C{} - d : d;
  }

  Vector<C> solve(const Vector<C>& b) const {
    if (singular_) throw std::domain_error("LU solve on an exactly singular matrix");
    const std::size_t n = lu_.size();
    Vector<C> x(n);
    for (std::size_t i = 0; i < n; ++i) {
      C acc = b[perm_[i]];
      for (std::size_t j = 0; j < i; ++j) acc -= lu_[i][j] * x[j];
      x[i] = acc;
    }
    for (std::size_t i = n; i-- > 0;) {
      C acc = x[i];
      for (std::size_t j = i + 1; j < n; ++j) acc -= lu_[i][j] * x[j];
      x[i] = acc / lu_[i][i];
    }
    return x;
  }

 private:
  Matrix<C> lu_;
  std::vector<std::size_t> perm_;
  unsigned swaps_ = 0;
  bool singular_ = false;
};

template <class C>
C determinant(const Matrix<C>& a) {
  return LU<C>(a).determinant();
}

template <class C>
auto matrix_one_norm(const Matrix<C>& a) {
  decltype(abs(a[0][0])) best = abs(a[0][0]) * 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    auto s = abs(a[0][j]) * 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = s + abs(a[i][j]);
    if (best < s) best = s;
  }
  return best;
}

// kappa_1(A) computed from the explicit inverse; returns nullopt when the
// matrix is exactly singular. The systems here are small, so the O(n^3)
// inverse is cheaper than it sounds.
template <class C>
auto condition_estimate(const Matrix<C>& a) -> std::optional<decltype(abs(a[0][0]))> {
  LU<C> lu(a);
  if (lu.singular()) return std::nullopt;
  const std::size_t n = a.size();
  Matrix<C> inv(n, Vector<C>(n));
  for (std::size_t j = 0; j < n; ++j) {
    Vector<C> e(n, C{});
    e[j] = C(1);
    Vector<C> col = lu.solve(e);
    for (std::size_t i = 0; i < n; ++i) inv[i][j] = col[i];
  }
  return matrix_one_norm(a) * matrix_one_norm(inv);
}

template <class C>
struct NullDirection {
  Vector<C> vector;   // normalised to max |v_k| = 1
  decltype(abs(C{})) ratio;  // estimated sigma_min / ||A||_1
};

// Inverse iteration x <- A^{-1} x, which converges to the direction
// belonging to the smallest singular value of a nearly singular A.
template <class C>
NullDirection<C> smallest_singular_direction(const Matrix<C>& a, const Vector<C>& start, int iterations = 6) {
  const std::size_t n = a.size();
  LU<C> lu(a);
  Vector<C> x = start;
  auto norm_a = matrix_one_norm(a);
  if (lu.singular()) {
    // Exactly singular in working precision: nudge the diagonal by one ulp
    // of the matrix scale so the solve goes through.
    Matrix<C> b = a;
    auto eps = norm_a * unit_roundoff(norm_a);
    for (std::size_t i = 0; i < n; ++i) b[i][i] += C(eps);
    return smallest_singular_direction(b, start, iterations);
  }
  auto growth = norm_a * 0;
  for (int it = 0; it < iterations; ++it) {
    Vector<C> y = lu.solve(x);
    auto m = vector_max_abs(y);
    auto mx = vector_max_abs(x);
    growth = m / mx;
    for (auto& v : y) v = v / C(m);
    x = std::move(y);
  }
  // ||A^{-1} x|| / ||x|| approximates 1 / sigma_min.
  return {x, (growth * norm_a) == 0 ? growth : 1 / (growth * norm_a)};
}

}  // namespace lidstone
