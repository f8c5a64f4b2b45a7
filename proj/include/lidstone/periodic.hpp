#pragma once

// m-periodic derivative interpolation: find f with
//   f^{(mn+j)}(sigma_j) = a_j   for j = 0..m-1 and all n >= 0.
//
// With zeta = e^{2 pi i/m} and A_{kl}(t) = zeta^{kl} e^{zeta^k t sigma_l},
// an exponential sum f(z) = sum_k c_k e^{zeta^k t z} has
//   f^{(mn+j)}(sigma_j) = t^{mn+j} (A(t)^T c)_j,
// so Delta(t) = det A(t) governs everything: a zero alpha gives a nonzero
// null solution (A(alpha)^T c = 0), and Delta(1) != 0 makes the basis
// phi_j (A(1)^T c_j = e_j) well defined.

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "lidstone/constants.hpp"
#include "lidstone/expsum.hpp"
#include "lidstone/linalg.hpp"
#include "lidstone/zeros.hpp"

namespace lidstone {

struct PeriodicNodeSet {
  unsigned m = 2;
  std::vector<Cx> sigma;
  Cx zeta;
  Precision bits = kDefaultPrecision;

  // zeta^k, each computed directly from its angle
  Cx zeta_power(unsigned long k) const {
    return unit_root_angle(ldexp(Real::pi(bits), 1) * static_cast<long>(k % m) / static_cast<long>(m));
  }
};

inline PeriodicNodeSet make_nodes(unsigned m, std::vector<Cx> sigma, Precision bits = kDefaultPrecision) {
  require_precision(bits);
  if (m < 2) throw std::invalid_argument("periodic node set needs m >= 2");
  if (sigma.size() != m) {
    throw std::invalid_argument("periodic node set needs " + std::to_string(m) + " nodes, got " + std::to_string(sigma.size()));
  }
  PeriodicNodeSet out;
  out.m = m;
  out.bits = bits;
  for (auto& s : sigma) out.sigma.push_back(with_precision(s, bits));
  out.zeta = out.zeta_power(1);
  return out;
}

namespace detail {

inline PeriodicNodeSet at_precision(const PeriodicNodeSet& nodes, Precision bits) {
  return make_nodes(nodes.m, nodes.sigma, bits);
}

inline Matrix<Cx> delta_matrix(const PeriodicNodeSet& nodes, const Cx& t) {
  const unsigned m = nodes.m;
  const Cx tt = with_precision(t, nodes.bits);
  Matrix<Cx> a(m, Vector<Cx>(m));
  for (unsigned k = 0; k < m; ++k) {
    const Cx zk = nodes.zeta_power(k);
    for (unsigned l = 0; l < m; ++l) a[k][l] = nodes.zeta_power(static_cast<unsigned long>(k) * l) * exp(zk * tt * nodes.sigma[l]);
  }
  return a;
}

}  // namespace detail

inline Cx delta_determinant(const PeriodicNodeSet& nodes, const Cx& t) {
  return determinant(detail::delta_matrix(nodes, t));
}

// Delta'(t): sum over rows of the determinant with that row differentiated,
// d/dt A_{kl} = zeta^k sigma_l A_{kl}.
inline Cx delta_derivative(const PeriodicNodeSet& nodes, const Cx& t) {
  const Matrix<Cx> a = detail::delta_matrix(nodes, t);
  Cx acc(Real(0, nodes.bits));
  for (unsigned k = 0; k < nodes.m; ++k) {
    Matrix<Cx> b = a;
    const Cx zk = nodes.zeta_power(k);
    for (unsigned l = 0; l < nodes.m; ++l) b[k][l] = zk * nodes.sigma[l] * a[k][l];
    acc += determinant(b);
  }
  return acc;
}

struct DeltaZero {
  Cx zero;
  Real modulus;
  Real residual;  // |Delta(zero)|
};

inline DeltaZero smallest_delta_zero(const PeriodicNodeSet& nodes) {
  const Precision bits = nodes.bits;
  // Delta is rejected if it vanishes (or is constant) at 8 random points.
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> u(-2, 2);
  Real scale(0, bits), slope(0, bits);
  for (int i = 0; i < 8; ++i) {
    const Cx t(Real(u(rng), bits), Real(u(rng), bits));
    scale = max(scale, abs(delta_determinant(nodes, t)));
    slope = max(slope, abs(delta_derivative(nodes, t)));
  }
  const Real tiny = Real::pow2(-static_cast<long>(bits) / 2, bits);
  if (scale <= tiny) throw std::invalid_argument("Delta vanishes identically for this node set");
  if (slope <= tiny * scale) throw std::invalid_argument("Delta is constant for this node set and has no zero");

  AnalyticFunction f{
      [&nodes](const Cx& t, Precision b) { return delta_determinant(detail::at_precision(nodes, b), t); },
      [&nodes](const Cx& t, Precision b) { return delta_derivative(detail::at_precision(nodes, b), t); }};
  const ZeroResult z = smallest_zero(f, bits + 32);
  const Cx zero = with_precision(z.zero, bits);
  return {zero, abs(zero), abs(delta_determinant(nodes, zero))};
}

class SingularSystem : public std::runtime_error {
 public:
  SingularSystem(const std::string& what, std::optional<Real> condition)
      : std::runtime_error(what), condition_(std::move(condition)) {}
  // nullopt when the matrix is exactly singular at working precision
  const std::optional<Real>& condition() const { return condition_; }

 private:
  std::optional<Real> condition_;
};

struct PhiBasis {
  std::vector<ExponentialSum> phi;
  Real condition;  // 1-norm condition estimate of A(1)^T
  Real residual;   // max |phi_j^{(l)}(sigma_l) - delta_{jl}|
};

// phi_j = sum_k c_{jk} e^{zeta^k z} with phi_j^{(l)}(sigma_l) = delta_{jl}.
// Fails when the condition estimate exceeds 2^{bits/4}.
inline PhiBasis build_phi(const PeriodicNodeSet& nodes) {
  const Precision bits = nodes.bits;
  const PeriodicNodeSet work = detail::at_precision(nodes, bits + 32);
  const Cx one(Real(1, work.bits));
  const Matrix<Cx> at = transpose(detail::delta_matrix(work, one));
  const auto cond = condition_estimate(at);
  const Real limit = Real::pow2(static_cast<long>(bits) / 4, bits);
  if (!cond) throw SingularSystem("phi system is singular (Delta(1) = 0)", std::nullopt);
  if (*cond > limit) {
    throw SingularSystem("phi system is ill-conditioned (condition estimate " + cond->to_string(6) + " > 2^" +
                             std::to_string(bits / 4) + ")",
                         cond->with_precision(bits));
  }
  LU<Cx> lu(at);
  PhiBasis out;
  out.condition = cond->with_precision(bits);
  for (unsigned j = 0; j < nodes.m; ++j) {
    Vector<Cx> e(nodes.m, Cx(Real(0, work.bits)));
    e[j] = one;
    const Vector<Cx> c = lu.solve(e);
    std::vector<ExpTerm> terms;
    for (unsigned k = 0; k < nodes.m; ++k) terms.push_back({with_precision(c[k], bits), nodes.zeta_power(k)});
    out.phi.emplace_back(std::move(terms));
  }
  out.residual = Real(0, bits);
  for (unsigned j = 0; j < nodes.m; ++j) {
    for (unsigned l = 0; l < nodes.m; ++l) {
      const Cx target(Real(j == l ? 1 : 0, bits));
      out.residual = max(out.residual, abs(out.phi[j].derivative_at(l, nodes.sigma[l]) - target));
    }
  }
  return out;
}

inline ExponentialSum periodic_interpolant(const PeriodicNodeSet& nodes, const std::vector<Cx>& a) {
  if (a.size() != nodes.m) throw std::invalid_argument("interpolant needs one value per node");
  const PhiBasis basis = build_phi(nodes);
  ExponentialSum f;
  for (unsigned j = 0; j < nodes.m; ++j) f += a[j] * basis.phi[j];
  return f;
}

struct NullSolution {
  ExponentialSum f;   // sum_k c_k e^{zeta^k alpha z}, max |c_k| = 1
  Cx alpha;
  Real singular_ratio;  // sigma_min / ||A(alpha)||_1 estimate
  Precision bits_used;
};

// Null vector of A(alpha)^T at the smallest zero alpha of Delta. The
// precision is doubled (up to three times) until the smallest singular value
// is below 2^{-bits/2} of the matrix scale.
inline NullSolution null_solution(const PeriodicNodeSet& nodes) {
  Precision p = nodes.bits;
  for (int attempt = 0; attempt < 4; ++attempt, p *= 2) {
    const PeriodicNodeSet work = detail::at_precision(nodes, p);
    const DeltaZero z = smallest_delta_zero(work);
    const Matrix<Cx> at = transpose(detail::delta_matrix(work, z.zero));
    Vector<Cx> start;
    for (unsigned k = 0; k < nodes.m; ++k) start.push_back(Cx(Real(1, p), Real(static_cast<long>(k) + 1, p) / 7));
    NullDirection<Cx> d = smallest_singular_direction(at, start, 8);
    if (!(d.ratio < Real::pow2(-static_cast<long>(p) / 2, p))) continue;
    std::size_t arg = 0;
    for (std::size_t k = 1; k < d.vector.size(); ++k) {
      if (abs(d.vector[k]) > abs(d.vector[arg])) arg = k;
    }
    const Cx pivot = d.vector[arg];
    std::vector<ExpTerm> terms;
    for (unsigned k = 0; k < nodes.m; ++k) {
      terms.push_back({with_precision(d.vector[k] / pivot, nodes.bits), with_precision(nodes.zeta_power(k) * z.zero, nodes.bits)});
    }
    return {ExponentialSum(std::move(terms)), with_precision(z.zero, nodes.bits), d.ratio.with_precision(nodes.bits), p};
  }
  throw std::runtime_error("null_solution: smallest singular value did not separate after precision doubling");
}

struct JetReport {
  Real max_error;
  unsigned checks = 0;
  bool pass = false;
};

// max over j < m, n <= n_max of |f^{(mn+j)}(sigma_j) - a_j|; pass iff < tol.
inline JetReport verify_periodic_jets(const ExponentialSum& f, const PeriodicNodeSet& nodes, const std::vector<Cx>& a,
                                      unsigned n_max, const Real& tol) {
  if (a.size() != nodes.m) throw std::invalid_argument("jet check needs one value per node");
  JetReport out;
  out.max_error = Real(0, nodes.bits);
  for (unsigned j = 0; j < nodes.m; ++j) {
    for (unsigned n = 0; n <= n_max; ++n) {
      const unsigned long order = static_cast<unsigned long>(nodes.m) * n + j;
      out.max_error = max(out.max_error, abs(f.derivative_at(order, nodes.sigma[j]) - a[j]));
      ++out.checks;
    }
  }
  out.pass = out.max_error < tol;
  return out;
}

}  // namespace lidstone
