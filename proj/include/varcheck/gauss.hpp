#pragma once

#include <vector>

namespace varcheck {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes by Newton iteration on the Legendre polynomial; cached per order.
const GaussRule& gauss_rule(int order);

/// Compensated accumulator: keeps quadrature sums reproducible and
/// insensitive to ordering-scale roundoff.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

}  // namespace varcheck
