#pragma once

#include <vector>

#include "varcheck/exact.hpp"

namespace varcheck {

/// Rotation by 2*pi/3 around the x2-axis, oriented so that e1 maps to
/// (-1/2, 0, sqrt(3)/2).  The orientation is the one under which the
/// recursively defined conormals satisfy the cancellation identities
/// (nu_1^+ + nu_6^+ = 0 and so on).
const ExactMat3& rotation_matrix();

/// Reflection across the x1x3-plane (x2 -> -x2).
const ExactMat3& reflection_matrix();

ExactVec3 rot_apply(const ExactVec3& v);
ExactVec3 refl_apply(const ExactVec3& v);

/// Exact tables of the junction geometry: conormals nu_i^{+-} along L^{+-},
/// conormals eta_i^{+-} along the rays T_k, ray directions t_k and the
/// planes P_i^{+-} spanned by nu_i^{+-} and e2 (as projection matrices).
/// Everything is generated from the i=1,2 seeds by the exact rotation.
class ConormalTable {
 public:
  static const ConormalTable& instance();

  /// nu_i^s, the inward conormal of the half-sheet i on side s along L^s.
  const ExactVec3& nu(int i, Side s) const;
  /// eta_i^s, the inward conormal of the half-sheet along T_{ceil(i/2)}.
  /// Carries the 1/sqrt(7) scale tag.
  const ExactVec3& eta(int i, Side s) const;
  /// Unit direction t_k of the ray T_k, k in 1..3.
  const ExactVec3& ray(int k) const;
  /// Orthogonal projection onto the plane P_i^s = span{nu_i^s, e2}.
  const ExactMat3& plane(int i, Side s) const;

  /// Ray index ceil(i/2): the ray T_k bounding both halves of sheet i.
  static int ray_of_sheet(int i) { return (i + 1) / 2; }

 private:
  ConormalTable();
  ExactVec3 nu_[6][2];
  ExactVec3 eta_[6][2];
  ExactVec3 ray_[3];
  ExactMat3 plane_[6][2];
};

inline const ExactVec3& conormal(int i, Side s) { return ConormalTable::instance().nu(i, s); }
inline const ExactVec3& eta(int i, Side s) { return ConormalTable::instance().eta(i, s); }
inline const ExactMat3& plane_projection(int i, Side s) {
  return ConormalTable::instance().plane(i, s);
}

struct IdentityReport {
  int checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Runs every identity of the conormal family with exact zero tests:
/// the six pairwise cancellations with their plane equalities, the two
/// triple sums on each side, eta_i^+ = -eta_i^-, unit norms, projection
/// algebra and the rotation structure of the table.
IdentityReport verify_identities();

}  // namespace varcheck
