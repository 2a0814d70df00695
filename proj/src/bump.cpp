#include "varcheck/bump.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace varcheck {

namespace {

constexpr double kPi = 3.14159265358979323846;

double step(BumpProfile p, double s) {
  switch (p) {
    case BumpProfile::QuinticStep:
      return s * s * s * (10.0 + s * (-15.0 + 6.0 * s));
    case BumpProfile::CosineStep:
      return 0.5 * (1.0 - std::cos(kPi * s));
  }
  return 0.0;
}

double step_deriv(BumpProfile p, double s) {
  switch (p) {
    case BumpProfile::QuinticStep:
      return 30.0 * s * s * (1.0 - s) * (1.0 - s);
    case BumpProfile::CosineStep:
      return 0.5 * kPi * std::sin(kPi * s);
  }
  return 0.0;
}

// integral of step over [0, s]
double step_integral(BumpProfile p, double s) {
  switch (p) {
    case BumpProfile::QuinticStep:
      return s * s * s * s * (2.5 + s * (-3.0 + s));
    case BumpProfile::CosineStep:
      return 0.5 * s - std::sin(kPi * s) / (2.0 * kPi);
  }
  return 0.0;
}

double step_max_deriv(BumpProfile p) {
  switch (p) {
    case BumpProfile::QuinticStep:
      return 1.875;  // at s = 1/2
    case BumpProfile::CosineStep:
      return 0.5 * kPi;
  }
  return 0.0;
}

}  // namespace

BumpSpec BumpSpec::by_name(const std::string& name) {
  if (name == "quintic-plateau") return quintic_default();
  if (name == "alt") return alternate();
  if (name == "narrow-noncompliant") return noncompliant();
  throw std::invalid_argument("unknown bump id: " + name);
}

std::string BumpSpec::name() const {
  if (profile == BumpProfile::QuinticStep)
    return plateau_radius == 0.25 ? "quintic-plateau" : "narrow-noncompliant";
  return "alt";
}

double BumpSpec::eval(double t) const {
  t = std::abs(t);
  const double a = plateau_radius;
  const double b = transition_end();
  if (t <= a) return 1.0;
  if (t >= b) return 0.0;
  return 1.0 - step(profile, (t - a) / (b - a));
}

double BumpSpec::deriv(double t) const {
  const double sg = t < 0 ? -1.0 : 1.0;
  t = std::abs(t);
  const double a = plateau_radius;
  const double b = transition_end();
  if (t <= a || t >= b) return 0.0;
  return -sg * step_deriv(profile, (t - a) / (b - a)) / (b - a);
}

double BumpSpec::integral_0_to(double u) const {
  const double sg = u < 0 ? -1.0 : 1.0;
  u = std::abs(u);
  const double a = plateau_radius;
  const double b = transition_end();
  double v;
  if (u <= a) {
    v = u;
  } else if (u >= b) {
    v = 0.5;  // = (a + b) / 2 with a + b = 1
  } else {
    const double w = b - a;
    v = u - w * step_integral(profile, (u - a) / w);
  }
  return sg * v;
}

double BumpSpec::sup_abs_deriv() const {
  return step_max_deriv(profile) / (transition_end() - plateau_radius);
}

namespace {

void expect(BumpCheckReport& rep, bool ok, const std::string& name) {
  ++rep.checks;
  if (!ok) rep.failures.push_back(name);
}

}  // namespace

BumpCheckReport check_bump_properties(const BumpSpec& spec) {
  BumpCheckReport rep;
  const int n = 4001;
  bool range_ok = true, even_ok = true, decay_ok = true, deriv_ok = true, supp_ok = true;
  double quad = 0.0;
  const double h = 3.0 / (n - 1);
  for (int i = 0; i < n; ++i) {
    const double t = -1.5 + h * i;
    const double v = spec.eval(t);
    range_ok = range_ok && v >= 0.0 && v <= 1.0;
    even_ok = even_ok && std::abs(spec.eval(-t) - v) == 0.0;
    if (t >= 0.0) decay_ok = decay_ok && spec.deriv(t) <= 0.0;
    deriv_ok = deriv_ok && std::abs(spec.deriv(t)) <= 4.0;
    if (std::abs(t) >= 1.0) supp_ok = supp_ok && v == 0.0;
    quad += v * h * (i == 0 || i == n - 1 ? 0.5 : 1.0);
  }
  expect(rep, range_ok && spec.eval(0.0) == 1.0, "(a) 0 <= bump <= 1 and bump(0) = 1");
  expect(rep, supp_ok, "(b) support contained in (-1, 1)");
  expect(rep, even_ok, "(c) bump(-t) = bump(t)");
  expect(rep, decay_ok, "(d) bump'(t) <= 0 for t >= 0");
  expect(rep, deriv_ok && spec.sup_abs_deriv() <= 4.0, "(e) sup|bump'| <= 4");
  // The closed-form integral is exact; the trapezoid quadrature is the
  // independent cross-check (second-order accurate: tolerance h^2-ish).
  const double closed = 2.0 * spec.integral_0_to(2.0);
  expect(rep, std::abs(closed - 1.0) <= spec.normalization_tol,
         "(f) closed-form integral = 1");
  expect(rep, std::abs(quad - 1.0) <= 1e-5, "(f) quadrature integral = 1");
  return rep;
}

}  // namespace varcheck
