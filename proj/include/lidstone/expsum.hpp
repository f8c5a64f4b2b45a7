#pragma once

// Finite exponential sums  f(z) = sum_k c_k e^{lambda_k z}  with closed-form
// derivatives  f^{(n)}(z) = sum_k c_k lambda_k^n e^{lambda_k z}.

#include <stdexcept>
#include <utility>
#include <vector>

#include "lidstone/complex.hpp"
#include "lidstone/rational.hpp"

namespace lidstone {

struct ExpTerm {
  Cx c;
  Cx lambda;
};

class ExponentialSum {
 public:
  ExponentialSum() = default;

  // Terms with equal exponents are merged, so exponents end up pairwise
  // distinct.
  explicit ExponentialSum(std::vector<ExpTerm> terms) {
    for (auto& t : terms) add_term(std::move(t.c), std::move(t.lambda));
  }

  const std::vector<ExpTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add_term(Cx c, Cx lambda) {
    for (auto& t : terms_) {
      if (t.lambda == lambda) {
        t.c += c;
        return;
      }
    }
    terms_.push_back({std::move(c), std::move(lambda)});
  }

  Cx operator()(const Cx& z) const { return derivative_at(0, z); }

  Cx derivative_at(unsigned long n, const Cx& z) const {
    Cx acc;
    for (const auto& t : terms_) acc += t.c * pow(t.lambda, n) * exp(t.lambda * z);
    return acc;
  }

  ExponentialSum derivative(unsigned long n = 1) const {
    ExponentialSum out;
    for (const auto& t : terms_) out.terms_.push_back({t.c * pow(t.lambda, n), t.lambda});
    return out;
  }

  ExponentialSum& operator+=(const ExponentialSum& o) {
    for (const auto& t : o.terms_) add_term(t.c, t.lambda);
    return *this;
  }
  friend ExponentialSum operator+(ExponentialSum a, const ExponentialSum& b) { return a += b; }
  friend ExponentialSum operator*(const Cx& s, ExponentialSum a) {
    for (auto& t : a.terms_) t.c = s * t.c;
    return a;
  }

 private:
  std::vector<ExpTerm> terms_;
};

}  // namespace lidstone
