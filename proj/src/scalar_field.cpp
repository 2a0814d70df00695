#include "varcheck/scalar_field.hpp"

#include <cmath>
#include <stdexcept>

#include "varcheck/gauss.hpp"

namespace varcheck {

void ScalarField::require_domain(double x1) {
  if (!(x1 >= kMinX1))
    throw std::domain_error("ScalarField: x1 must be positive (>= 1e-12)");
}

double ScalarField::eval(double x1, double x2) const {
  require_domain(x1);
  return (x1 / kSqrt3) * 2.0 * bump_.integral_0_to(x2 / x1);
}

Vec2 ScalarField::grad(double x1, double x2) const {
  require_domain(x1);
  const double u = x2 / x1;
  const double phi = bump_.eval(u);
  const double d1 = (2.0 * bump_.integral_0_to(u)) / kSqrt3 - (2.0 * x2 / (x1 * kSqrt3)) * phi;
  const double d2 = (2.0 / kSqrt3) * phi;
  return {d1, d2};
}

Mat2 ScalarField::hess(double x1, double x2) const {
  require_domain(x1);
  const double u = x2 / x1;
  const double dphi = bump_.deriv(u);
  Mat2 h;
  h(0, 0) = (2.0 * x2 * x2 / (x1 * x1 * x1 * kSqrt3)) * dphi;
  h(0, 1) = h(1, 0) = (-2.0 * x2 / (x1 * x1 * kSqrt3)) * dphi;
  h(1, 1) = (2.0 / (x1 * kSqrt3)) * dphi;
  return h;
}

namespace {

double hess_mass_at_level(const ScalarField& field, const ChartSector& w, int level) {
  // Geometric shells toward r_in (or dyadic toward 0 when r_in == 0),
  // uniform angular cells, tensor Gauss per cell.
  const int shells = 4 + 2 * level;
  const int nang = std::max(4, 4 << level);
  const int order = std::min(2 + level, 10);
  const GaussRule& gr = gauss_rule(order);

  const double r_hi = w.r_out;
  const double r_lo = w.r_in > 0.0 ? w.r_in : r_hi * std::ldexp(1.0, -shells);
  const double ratio = std::pow(r_lo / r_hi, 1.0 / shells);

  KahanSum acc;
  for (int s = 0; s < shells; ++s) {
    const double ra = r_hi * std::pow(ratio, s + 1);
    const double rb = r_hi * std::pow(ratio, s);
    for (int j = 0; j < nang; ++j) {
      const double ta = w.theta_lo + (w.theta_hi - w.theta_lo) * j / nang;
      const double tb = w.theta_lo + (w.theta_hi - w.theta_lo) * (j + 1) / nang;
      for (size_t ir = 0; ir < gr.nodes.size(); ++ir) {
        const double r = 0.5 * (ra + rb) + 0.5 * (rb - ra) * gr.nodes[ir];
        const double wr = 0.5 * (rb - ra) * gr.weights[ir];
        for (size_t it = 0; it < gr.nodes.size(); ++it) {
          const double th = 0.5 * (ta + tb) + 0.5 * (tb - ta) * gr.nodes[it];
          const double wt = 0.5 * (tb - ta) * gr.weights[it];
          const double x1 = r * std::cos(th);
          const double x2 = r * std::sin(th);
          if (x1 < kMinX1) continue;
          const Mat2 h = field.hess(x1, x2);
          acc.add(h.norm() * r * wr * wt);
        }
      }
    }
  }
  return acc.value();
}

}  // namespace

HessMassResult hess_mass(const ScalarField& field, const ChartSector& window, int level,
                         double rel_tol) {
  HessMassResult res;
  res.coarse_value = hess_mass_at_level(field, window, std::max(1, level - 1));
  res.value = hess_mass_at_level(field, window, level);
  const double scale = std::max({std::abs(res.value), std::abs(res.coarse_value), 1e-14});
  res.converged = std::abs(res.value - res.coarse_value) <= rel_tol * scale;
  return res;
}

}  // namespace varcheck
