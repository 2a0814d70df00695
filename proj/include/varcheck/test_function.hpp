#pragma once

#include <memory>
#include <string>
#include <vector>

#include "varcheck/core.hpp"

namespace varcheck {

/// C^1 test function on position x Grassmannian, differentiated on the
/// ambient matrix space: the Grassmannian is embedded as projection
/// matrices and D* is the entrywise matrix gradient (chordal/Frobenius
/// geometry).
class TestFunction {
 public:
  virtual ~TestFunction() = default;

  struct Eval {
    double value = 0.0;
    Vec3 grad_x = Vec3::Zero();
    Mat3 grad_P = Mat3::Zero();
  };

  virtual Eval eval(const Vec3& x, const Mat3& P) const = 0;
  virtual double support_radius() const = 0;
  virtual std::string id() const = 0;

  double value(const Vec3& x, const Mat3& P) const { return eval(x, P).value; }
};

/// Compactly supported C^1 vector field with analytic Jacobian.
class VectorField {
 public:
  virtual ~VectorField() = default;

  struct Eval {
    Vec3 value = Vec3::Zero();
    Mat3 jacobian = Mat3::Zero();  // jacobian(a, b) = d Y_a / d x_b
  };

  virtual Eval eval(const Vec3& x) const = 0;
  virtual double support_radius() const = 0;
  virtual std::string id() const = 0;

  Vec3 value(const Vec3& x) const { return eval(x).value; }
};

// ---------------------------------------------------------------------------
// C^2 plateau profile on a 1-D variable, the building block of all battery
// functions.  Rises 0 -> 1 on (lo, rise_end), holds 1 on [rise_end,
// fall_start], falls back to 0 on (fall_start, hi).
// ---------------------------------------------------------------------------
struct PlateauProfile {
  double lo = 0.0, rise_end = 1.0, fall_start = 2.0, hi = 3.0;
  double scale = 1.0;

  double value(double t) const;
  double deriv(double t) const;
  /// Exact integral over the line (plateau + half of each edge, times scale).
  double integral() const;
  /// Rescaled copy with unit integral.
  PlateauProfile normalized() const;
};

/// Grassmannian bump f(P) = chi(|P - Q|_F^2 / eps^2): equals 1 at Q, vanishes
/// for |P - Q|_F >= eps, with analytic matrix gradient.
struct GrassmannBump {
  Mat3 center = Mat3::Zero();
  double eps = 0.5;

  double value(const Mat3& P) const;
  Mat3 grad(const Mat3& P) const;
};

// Battery members -----------------------------------------------------------

/// psi(|x|^2) [* f(P)] [* linear factor].
class RadialTestFunction : public TestFunction {
 public:
  enum class Extra { None, GrassmannBumpFactor, EntryP33, FactorX2 };

  RadialTestFunction(std::string id, PlateauProfile radial_sq, Extra extra = Extra::None,
                     GrassmannBump bump = {});
  Eval eval(const Vec3& x, const Mat3& P) const override;
  double support_radius() const override { return std::sqrt(radial_sq_.hi); }
  std::string id() const override { return id_; }

 private:
  std::string id_;
  PlateauProfile radial_sq_;
  Extra extra_;
  GrassmannBump bump_;
};

/// The planar-support construction phi(x2) psi(x1^2 + x3^2) f(P): supported
/// in a tube around L^+ away from the origin and, on the Grassmannian, in an
/// eps-ball around a chosen plane.  phi has unit integral and psi(0) = 1, so
/// pairing with a boundary measure on L^+ reads off the conormal atom at the
/// chosen plane.
class PlanarSupportTestFunction : public TestFunction {
 public:
  PlanarSupportTestFunction(std::string id, PlateauProfile x2_profile, PlateauProfile tube_sq,
                            GrassmannBump bump);
  Eval eval(const Vec3& x, const Mat3& P) const override;
  double support_radius() const override;
  std::string id() const override { return id_; }

  const GrassmannBump& grassmann() const { return bump_; }

 private:
  std::string id_;
  PlateauProfile x2_profile_;  // unit integral, support in (1, 3)
  PlateauProfile tube_sq_;     // plateau at 0, support of x1^2+x3^2 in [0, 1/2)
  GrassmannBump bump_;
};

/// Builds the planar-support test function centered at the plane Q.
/// Rejects eps that is not below half the minimum pairwise chordal distance
/// of the distinct sheet planes, naming a violating pair.
std::unique_ptr<TestFunction> make_test_function(const Mat3& grassmann_center, double eps);

/// The fixed battery used by the residual suites: >= 5 functions with
/// supports away from the origin and a mix of pure-spatial, Grassmannian-
/// localized and matrix-entry factors.
std::vector<std::shared_ptr<TestFunction>> standard_battery();

// Vector fields --------------------------------------------------------------

/// v * psi(|x|^2) for a constant direction v.
class DirectionalAnnulusField : public VectorField {
 public:
  DirectionalAnnulusField(std::string id, Vec3 direction, PlateauProfile radial_sq);
  Eval eval(const Vec3& x) const override;
  double support_radius() const override { return std::sqrt(radial_sq_.hi); }
  std::string id() const override { return id_; }

 private:
  std::string id_;
  Vec3 dir_;
  PlateauProfile radial_sq_;
};

/// v * psi(|x - c|^2): a bump localized near a point, used to probe a single
/// junction curve.
class LocalizedField : public VectorField {
 public:
  LocalizedField(std::string id, Vec3 direction, Vec3 center, double radius);
  Eval eval(const Vec3& x) const override;
  double support_radius() const override { return center_.norm() + std::sqrt(prof_.hi); }
  std::string id() const override { return id_; }

 private:
  std::string id_;
  Vec3 dir_;
  Vec3 center_;
  PlateauProfile prof_;
};

/// The three constant-direction annulus fields used by the distributional-
/// boundary checks.
std::vector<std::shared_ptr<VectorField>> standard_vector_fields();

}  // namespace varcheck
