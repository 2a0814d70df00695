#include "varcheck/exact.hpp"

#include <sstream>

namespace varcheck {

int QSqrt3::sign() const {
  const int sa = a.sign();
  const int sb = b.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // a and b have opposite signs: compare a^2 with 3 b^2.
  const Rational a2 = a * a;
  const Rational b23 = 3 * b * b;
  if (a2 == b23) return 0;
  return a2 > b23 ? sa : sb;
}

double QSqrt3::to_double() const {
  return a.convert_to<double>() + b.convert_to<double>() * kSqrt3;
}

std::string QSqrt3::str() const {
  std::ostringstream os;
  os << a.str();
  if (b != 0) os << (b > 0 ? "+" : "") << b.str() << "*sqrt(3)";
  return os.str();
}

QSqrt3 operator+(const QSqrt3& x, const QSqrt3& y) { return {x.a + y.a, x.b + y.b}; }
QSqrt3 operator-(const QSqrt3& x, const QSqrt3& y) { return {x.a - y.a, x.b - y.b}; }
QSqrt3 operator-(const QSqrt3& x) { return {-x.a, -x.b}; }
QSqrt3 operator*(const QSqrt3& x, const QSqrt3& y) {
  return {x.a * y.a + 3 * x.b * y.b, x.a * y.b + x.b * y.a};
}
bool operator==(const QSqrt3& x, const QSqrt3& y) { return x.a == y.a && x.b == y.b; }
bool operator<(const QSqrt3& x, const QSqrt3& y) { return (x - y).sign() < 0; }

QSqrt3 ExactVec3::norm_sq() const { return c[0] * c[0] + c[1] * c[1] + c[2] * c[2]; }

bool ExactVec3::is_unit() const {
  return norm_sq() == (scale == Scale::One ? QSqrt3(1) : QSqrt3(7));
}

Vec3 ExactVec3::to_double() const {
  const double f = scale == Scale::One ? 1.0 : 1.0 / std::sqrt(7.0);
  return f * Vec3(c[0].to_double(), c[1].to_double(), c[2].to_double());
}

std::string ExactVec3::str() const {
  std::ostringstream os;
  if (scale == Scale::InvSqrt7) os << "(1/sqrt(7))*";
  os << "(" << c[0].str() << ", " << c[1].str() << ", " << c[2].str() << ")";
  return os.str();
}

ExactVec3 operator+(const ExactVec3& x, const ExactVec3& y) {
  if (x.scale != y.scale)
    throw std::logic_error("ExactVec3: sum across different scale families");
  return {x.c[0] + y.c[0], x.c[1] + y.c[1], x.c[2] + y.c[2], x.scale};
}

ExactVec3 operator-(const ExactVec3& x) { return {-x.c[0], -x.c[1], -x.c[2], x.scale}; }

bool operator==(const ExactVec3& x, const ExactVec3& y) {
  return x.scale == y.scale && x.c[0] == y.c[0] && x.c[1] == y.c[1] && x.c[2] == y.c[2];
}

ExactMat3 ExactMat3::identity() {
  ExactMat3 r;
  for (int i = 0; i < 3; ++i) r(i, i) = QSqrt3(1);
  return r;
}

ExactMat3 ExactMat3::transposed() const {
  ExactMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
  return r;
}

QSqrt3 ExactMat3::trace() const { return (*this)(0, 0) + (*this)(1, 1) + (*this)(2, 2); }

Mat3 ExactMat3::to_double() const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = (*this)(i, j).to_double();
  return r;
}

ExactMat3 operator*(const ExactMat3& x, const ExactMat3& y) {
  ExactMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      QSqrt3 s;
      for (int k = 0; k < 3; ++k) s = s + x(i, k) * y(k, j);
      r(i, j) = s;
    }
  return r;
}

ExactVec3 operator*(const ExactMat3& m, const ExactVec3& v) {
  ExactVec3 r;
  r.scale = v.scale;
  for (int i = 0; i < 3; ++i) {
    QSqrt3 s;
    for (int k = 0; k < 3; ++k) s = s + m(i, k) * v[k];
    r[i] = s;
  }
  return r;
}

bool operator==(const ExactMat3& x, const ExactMat3& y) { return x.m == y.m; }

}  // namespace varcheck
