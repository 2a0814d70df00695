#pragma once

#include "varcheck/core.hpp"

namespace varcheck {

/// Weak second fundamental form A_ijk = sum_{l=1,2} T_il d_l T_jk at a chart
/// point.  The contraction runs over the two chart directions only: T
/// depends on (x1, x2) alone, so the ambient extension constant in x3 has a
/// vanishing third partial.
struct Tensor333 {
  double v[3][3][3] = {};

  double operator()(int i, int j, int k) const { return v[i][j][k]; }
  double& operator()(int i, int j, int k) { return v[i][j][k]; }

  double max_abs() const;
};

/// Pointwise tangent data of a graph sheet (or its isometric image):
/// tangent projection, its two chart derivatives, the curvature tensor and
/// the mean curvature vector H_l = sum_j A_jlj.
struct TangentFrame {
  Mat3 T = Mat3::Zero();
  Mat3 dT[2] = {Mat3::Zero(), Mat3::Zero()};
  Tensor333 A;
  Vec3 H = Vec3::Zero();
};

/// Orthogonal projection onto the tangent plane of the graph with the given
/// gradient: T_ij = delta_ij - g_i g_j / q, T_i3 = g_i / q, T_33 = 1 - 1/q,
/// q = 1 + |grad|^2.
Mat3 projection_from_gradient(const Vec2& grad);

/// Chart partials d_l T for l = 1, 2 in closed form from gradient and
/// Hessian of g.
void projection_deriv(const Vec2& grad, const Mat2& hess, Mat3 out[2]);

Tensor333 curvature_tensor(const Vec2& grad, const Mat2& hess);

Vec3 mean_curvature(const Tensor333& A);

TangentFrame chart_frame(const Vec2& grad, const Mat2& hess);

/// Frame of the isometric image: T' = Q T Q^T, A'_ijk = Q_ia Q_jb Q_kc A_abc,
/// H' = Q H.  The chart derivatives keep their chart index l and transform
/// in (j, k) only.
TangentFrame pushforward_frame(const Mat3& Q, const TangentFrame& frame);

}  // namespace varcheck
