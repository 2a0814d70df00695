#pragma once

#include <string>
#include <vector>

namespace varcheck {

/// Transition profile of the plateau bump: a smooth step S on [0,1] with
/// S(0)=0, S(1)=1 and S(s)+S(1-s)=1.  The point symmetry makes the bump
/// integrate to exactly plateau_radius + (1 - plateau_radius) = 1.
enum class BumpProfile { QuinticStep, CosineStep };

/// Even plateau bump: 1 on [-a, a], smooth descent to 0 at |t| = b = 1 - a,
/// zero beyond.  Satisfies 0 <= bump <= 1, bump(0) = 1, support in (-1, 1),
/// evenness, monotone decay for t >= 0 and unit integral; the derivative
/// bound sup|bump'| <= 4 holds iff the transition is wide enough.
struct BumpSpec {
  BumpProfile profile = BumpProfile::QuinticStep;
  double plateau_radius = 0.25;  // a, must lie in (0, 1/2)
  double normalization_tol = 1e-12;

  static BumpSpec quintic_default() { return {}; }
  static BumpSpec alternate() { return {BumpProfile::CosineStep, 0.25, 1e-12}; }
  /// Narrow transition; sup|bump'| = 6.25 > 4 violates the derivative bound.
  static BumpSpec noncompliant() { return {BumpProfile::QuinticStep, 0.35, 1e-12}; }

  static BumpSpec by_name(const std::string& name);  // throws on unknown name
  std::string name() const;

  double transition_end() const { return 1.0 - plateau_radius; }

  double eval(double t) const;
  double deriv(double t) const;
  /// Closed-form antiderivative: integral of the bump over [0, u] (odd in u,
  /// saturates at 1/2 for u >= transition_end()).
  double integral_0_to(double u) const;
  /// Closed-form sup|bump'|.
  double sup_abs_deriv() const;
};

inline double bump_eval(const BumpSpec& spec, double t) { return spec.eval(t); }
inline double bump_deriv(const BumpSpec& spec, double t) { return spec.deriv(t); }

struct BumpCheckReport {
  int checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Asserts the six bump properties by closed form, dense sampling and
/// quadrature of the integral.
BumpCheckReport check_bump_properties(const BumpSpec& spec);

}  // namespace varcheck
