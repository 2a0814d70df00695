#pragma once

#include "varcheck/bump.hpp"
#include "varcheck/core.hpp"

namespace varcheck {

/// The graph function on the half-plane {x1 > 0}:
///   g(x1, x2) = (x1 / sqrt(3)) * I(x2 / x1),   I(u) = integral of the bump
/// over [-u, u].  g is 1-homogeneous, odd in x2, equals +- x1/sqrt(3) on
/// {|x2| > x1} and has closed-form first and second derivatives driven by
/// the bump and its derivative.
class ScalarField {
 public:
  explicit ScalarField(BumpSpec bump = BumpSpec::quintic_default()) : bump_(bump) {}

  const BumpSpec& bump() const { return bump_; }

  double eval(double x1, double x2) const;
  Vec2 grad(double x1, double x2) const;
  Mat2 hess(double x1, double x2) const;

 private:
  static void require_domain(double x1);
  BumpSpec bump_;
};

/// Chart-space window for the Hessian mass integral: the polar sector
/// {r_in < r < r_out, theta_lo < theta < theta_hi} of the half-plane,
/// theta measured from the x1-axis (so |theta| < pi/2).
struct ChartSector {
  double r_in = 0.0;
  double r_out = 1.0;
  double theta_lo = -1.5707963267948966;
  double theta_hi = 1.5707963267948966;
};

struct HessMassResult {
  double value = 0.0;
  double coarse_value = 0.0;
  bool converged = false;  // refinement agreement within rel_tol
};

/// Quadrature of |D^2 g| (Frobenius norm) over the sector, with a
/// self-convergence check against one coarser refinement level.
HessMassResult hess_mass(const ScalarField& field, const ChartSector& window, int level,
                         double rel_tol = 0.01);

}  // namespace varcheck
