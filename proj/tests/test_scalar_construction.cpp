#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "varcheck/scalar_field.hpp"

using namespace varcheck;

namespace {

const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

}  // namespace

TEST_CASE("bump point values") {
  for (const BumpSpec spec : {BumpSpec::quintic_default(), BumpSpec::alternate()}) {
    CAPTURE(spec.name());
    CHECK(bump_eval(spec, 0.0) == 1.0);
    CHECK(bump_eval(spec, 1.5) == 0.0);
    CHECK(bump_eval(spec, 1.0) == 0.0);
    CHECK(bump_eval(spec, -0.3) == bump_eval(spec, 0.3));
    CHECK(bump_deriv(spec, 0.0) == 0.0);
    CHECK(bump_deriv(spec, 0.6) <= 0.0);
  }
}

TEST_CASE("bump derivative against central differences") {
  for (const BumpSpec spec : {BumpSpec::quintic_default(), BumpSpec::alternate()}) {
    CAPTURE(spec.name());
    const double h = 1e-4;
    for (double t : {0.5, -0.5, 0.3, 0.7, 0.26, 0.74}) {
      const double fd = (bump_eval(spec, t + h) - bump_eval(spec, t - h)) / (2 * h);
      CHECK(std::abs(bump_deriv(spec, t) - fd) <= 1e-6);
    }
  }
}

TEST_CASE("bump property report") {
  CHECK(check_bump_properties(BumpSpec::quintic_default()).ok());
  CHECK(check_bump_properties(BumpSpec::alternate()).ok());
  // sup|bump'| = 1.875 / 0.3 = 6.25 > 4 for the narrow transition.
  const BumpCheckReport bad = check_bump_properties(BumpSpec::noncompliant());
  CHECK_FALSE(bad.ok());
  bool deriv_bound_failed = false;
  for (const auto& f : bad.failures) deriv_bound_failed |= f.find("(e)") != std::string::npos;
  CHECK(deriv_bound_failed);
}

TEST_CASE("g point values") {
  const ScalarField field;
  for (double x1 : {0.3, 1.0, 2.5}) CHECK(field.eval(x1, 0.0) == 0.0);
  CHECK(field.eval(1.0, 2.0) == doctest::Approx(kInvSqrt3).epsilon(1e-14));
  CHECK(field.eval(1.0, 1.0) == doctest::Approx(kInvSqrt3).epsilon(1e-14));
  CHECK(field.eval(1.0, -2.0) == doctest::Approx(-kInvSqrt3).epsilon(1e-14));
  CHECK_THROWS_AS(field.eval(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(field.eval(-1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(field.grad(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(field.hess(-2.0, 1.0), std::domain_error);
}

TEST_CASE("g gradient closed form") {
  const ScalarField field;
  for (double x1 : {0.4, 1.0, 3.0}) {
    const Vec2 g0 = field.grad(x1, 0.0);
    CHECK(g0[0] == 0.0);
    CHECK(g0[1] == doctest::Approx(2.0 * kInvSqrt3).epsilon(1e-14));
  }
  const Vec2 g12 = field.grad(1.0, 2.0);
  CHECK(g12[0] == doctest::Approx(kInvSqrt3).epsilon(1e-14));
  CHECK(g12[1] == 0.0);

  const double h = 1e-4;
  const Vec2 fd((field.eval(1 + h, 0.5) - field.eval(1 - h, 0.5)) / (2 * h),
                (field.eval(1, 0.5 + h) - field.eval(1, 0.5 - h)) / (2 * h));
  CHECK((field.grad(1.0, 0.5) - fd).cwiseAbs().maxCoeff() <= 1e-6);
}

TEST_CASE("g hessian closed form") {
  const ScalarField field;
  CHECK(field.hess(1.0, 2.0).cwiseAbs().maxCoeff() == 0.0);
  CHECK(field.hess(0.7, 0.0)(1, 1) == 0.0);  // bump'(0) = 0

  const double h = 1e-4;
  Mat2 fd;
  fd.col(0) = (field.grad(1 + h, 0.5) - field.grad(1 - h, 0.5)) / (2 * h);
  fd.col(1) = (field.grad(1, 0.5 + h) - field.grad(1, 0.5 - h)) / (2 * h);
  CHECK((field.hess(1.0, 0.5) - fd).cwiseAbs().maxCoeff() <= 1e-5);
}

TEST_CASE("g is odd in x2 and obeys the gradient bounds") {
  const ScalarField field;
  for (int i = 0; i < 200; ++i) {
    const double x1 = 0.05 + 0.015 * i;
    const double u = -1.9 + 0.019 * i;
    const double x2 = u * x1;
    CHECK(field.eval(x1, x2) == doctest::Approx(-field.eval(x1, -x2)).epsilon(1e-14));
    if (std::abs(x2) < x1) {
      const Vec2 gr = field.grad(x1, x2);
      CHECK(std::abs(gr[0]) <= 3.0 * kInvSqrt3 + 1e-12);
      CHECK(std::abs(gr[1]) <= 2.0 * kInvSqrt3 + 1e-12);
    }
  }
}

TEST_CASE("hess_mass windows") {
  const ScalarField field;
  // Window inside the planar region {x1 < |x2|}: theta beyond pi/4.
  const HessMassResult planar = hess_mass(field, {0.5, 2.0, 0.9, 1.5}, 3);
  CHECK(planar.value == 0.0);
  CHECK(planar.converged);

  // Mass over B(0, eps) decreases to 0 (the integrand is ~ 1/r).
  double prev = 1e30;
  for (double eps : {0.8, 0.4, 0.2, 0.1}) {
    const HessMassResult m = hess_mass(field, {0.0, eps, -1.5707, 1.5707}, 3);
    CHECK(m.value < prev);
    CHECK(m.value > 0.0);
    prev = m.value;
  }
  CHECK(prev < 0.5);

  // Refinement agreement within 1% on a generic annulus.
  const HessMassResult ann = hess_mass(field, {0.25, 2.0, -1.5, 1.5}, 4, 0.01);
  CHECK(ann.converged);
}
