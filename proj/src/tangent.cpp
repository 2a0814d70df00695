#include "varcheck/tangent.hpp"

#include <cmath>

namespace varcheck {

double Tensor333::max_abs() const {
  double m = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) m = std::max(m, std::abs(v[i][j][k]));
  return m;
}

Mat3 projection_from_gradient(const Vec2& grad) {
  const double q = 1.0 + grad.squaredNorm();
  Mat3 T;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) T(i, j) = (i == j ? 1.0 : 0.0) - grad[i] * grad[j] / q;
    T(i, 2) = T(2, i) = grad[i] / q;
  }
  T(2, 2) = 1.0 - 1.0 / q;
  return T;
}

void projection_deriv(const Vec2& grad, const Mat2& hess, Mat3 out[2]) {
  const double q = 1.0 + grad.squaredNorm();
  const double q2 = q * q;
  for (int l = 0; l < 2; ++l) {
    const double S = grad[0] * hess(l, 0) + grad[1] * hess(l, 1);
    Mat3& d = out[l];
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k)
        d(j, k) = -(hess(l, j) * grad[k] + grad[j] * hess(l, k)) / q +
                  2.0 * grad[j] * grad[k] * S / q2;
      d(j, 2) = d(2, j) = hess(l, j) / q - 2.0 * grad[j] * S / q2;
    }
    d(2, 2) = 2.0 * S / q2;
  }
}

Tensor333 curvature_tensor(const Vec2& grad, const Mat2& hess) {
  const Mat3 T = projection_from_gradient(grad);
  Mat3 dT[2];
  projection_deriv(grad, hess, dT);
  Tensor333 A;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        A(i, j, k) = T(i, 0) * dT[0](j, k) + T(i, 1) * dT[1](j, k);
  return A;
}

Vec3 mean_curvature(const Tensor333& A) {
  Vec3 H;
  for (int l = 0; l < 3; ++l) {
    double s = 0.0;
    for (int j = 0; j < 3; ++j) s += A(j, l, j);
    H[l] = s;
  }
  return H;
}

TangentFrame chart_frame(const Vec2& grad, const Mat2& hess) {
  TangentFrame f;
  f.T = projection_from_gradient(grad);
  projection_deriv(grad, hess, f.dT);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        f.A(i, j, k) = f.T(i, 0) * f.dT[0](j, k) + f.T(i, 1) * f.dT[1](j, k);
  f.H = mean_curvature(f.A);
  return f;
}

TangentFrame pushforward_frame(const Mat3& Q, const TangentFrame& frame) {
  TangentFrame out;
  out.T = Q * frame.T * Q.transpose();
  for (int l = 0; l < 2; ++l) out.dT[l] = Q * frame.dT[l] * Q.transpose();
  // Mode-wise contraction of Q (x) Q (x) Q against A.
  Tensor333 t1, t2;
  for (int i = 0; i < 3; ++i)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        t1(i, b, c) =
            Q(i, 0) * frame.A(0, b, c) + Q(i, 1) * frame.A(1, b, c) + Q(i, 2) * frame.A(2, b, c);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int c = 0; c < 3; ++c)
        t2(i, j, c) = Q(j, 0) * t1(i, 0, c) + Q(j, 1) * t1(i, 1, c) + Q(j, 2) * t1(i, 2, c);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        out.A(i, j, k) = Q(k, 0) * t2(i, j, 0) + Q(k, 1) * t2(i, j, 1) + Q(k, 2) * t2(i, j, 2);
  out.H = Q * frame.H;
  return out;
}

}  // namespace varcheck
