#pragma once

// 64-bit (long double) coefficient tables for the Lidstone and Whittaker
// families, used by the large sampling grids of the bound suites.
//
// Writing lambda_k = L_k'(0) and mu_k = M_k(0), the relations L_n'' = L_{n-1}
// and M_n'' = M_{n-1} give
//   L_n(z) = sum_j lambda_{n-j} z^{2j+1} / (2j+1)!
//   M_n(z) = sum_j mu_{n-j}     z^{2j}   / (2j)!
// and the boundary conditions L_n(1) = 0, M_n(1) = 0 give the scalar
// recurrences
//   lambda_n = -sum_{j>=1} lambda_{n-j} / (2j+1)!,   lambda_0 = 1
//   mu_n     = -sum_{j>=1} mu_{n-j} / (2j)!,         mu_0 = 1.
// The cancellation in these sums is mild (a factor below sinh(pi)/pi), so
// the tables are accurate to a few ulps for every n they cover.

#include <algorithm>
#include <cmath>
#include <mutex>
#include <vector>

namespace lidstone {

namespace detail {

inline long double inverse_factorial_ld(unsigned k) {
  static std::mutex mutex;
  static std::vector<long double> table{1.0L};
  std::lock_guard<std::mutex> lock(mutex);
  while (table.size() <= k) table.push_back(table.back() / static_cast<long double>(table.size()));
  return table[k];
}

// offset 1 for Lidstone (odd factorials), 0 for Whittaker.
inline long double boundary_value_ld(unsigned n, unsigned offset) {
  static std::mutex mutex;
  static std::vector<long double> tables[2] = {{1.0L}, {1.0L}};
  std::lock_guard<std::mutex> lock(mutex);
  auto& t = tables[offset];
  while (t.size() <= n) {
    const std::size_t m = t.size();
    long double acc = 0;
    for (std::size_t j = 1; j <= m; ++j) acc -= t[m - j] * inverse_factorial_ld(static_cast<unsigned>(2 * j + offset));
    t.push_back(acc);
  }
  return t[n];
}

}  // namespace detail

// Coefficients (ascending, length 2n+2) of L_n in long double.
inline std::vector<long double> lidstone_coefficients_ld(unsigned n) {
  std::vector<long double> c(2 * static_cast<std::size_t>(n) + 2, 0.0L);
  for (unsigned j = 0; j <= n; ++j) c[2 * j + 1] = detail::boundary_value_ld(n - j, 1) * detail::inverse_factorial_ld(2 * j + 1);
  return c;
}

// Coefficients (ascending, length 2n+1) of M_n in long double.
inline std::vector<long double> whittaker_coefficients_ld(unsigned n) {
  std::vector<long double> c(2 * static_cast<std::size_t>(n) + 1, 0.0L);
  for (unsigned j = 0; j <= n; ++j) c[2 * j] = detail::boundary_value_ld(n - j, 0) * detail::inverse_factorial_ld(2 * j);
  return c;
}

// log |g^{2n} L_n(./g)|_r = log sum_j |a_j| |g|^{2n-2j-1} r^{2j+1}.
// All terms share one sign on the imaginary axis, so the sup over the
// circle is attained at z = i r and equals the sum of absolute values.
inline long double log_sup_scaled_lidstone_ld(unsigned n, long double gap_modulus, long double r) {
  const long double lg = std::log(gap_modulus), lr = std::log(r);
  long double best = -INFINITY;
  std::vector<long double> logs;
  for (unsigned j = 0; j <= n; ++j) {
    const long double a = detail::boundary_value_ld(n - j, 1) * detail::inverse_factorial_ld(2 * j + 1);
    if (a == 0) continue;
    const long double v = std::log(std::fabs(a)) + (2.0L * n - 2.0L * j - 1.0L) * lg + (2.0L * j + 1.0L) * lr;
    logs.push_back(v);
    best = std::max(best, v);
  }
  long double s = 0;
  for (long double v : logs) s += std::exp(v - best);
  return best + std::log(s);
}

// Whittaker analogue; the sup is attained at z = i r.
inline long double log_sup_scaled_whittaker_ld(unsigned n, long double gap_modulus, long double r) {
  const long double lg = std::log(gap_modulus), lr = std::log(r);
  long double best = -INFINITY;
  std::vector<long double> logs;
  for (unsigned j = 0; j <= n; ++j) {
    const long double a = detail::boundary_value_ld(n - j, 0) * detail::inverse_factorial_ld(2 * j);
    if (a == 0) continue;
    const long double v = std::log(std::fabs(a)) + (2.0L * n - 2.0L * j) * lg + (j == 0 ? 0.0L : 2.0L * j * lr);
    logs.push_back(v);
    best = std::max(best, v);
  }
  long double s = 0;
  for (long double v : logs) s += std::exp(v - best);
  return best + std::log(s);
}

}  // namespace lidstone
