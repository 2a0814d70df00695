#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "varcheck/core.hpp"

namespace varcheck {

using Rational = boost::multiprecision::cpp_rational;

/// Element of the quadratic field Q(sqrt(3)), stored as a + b*sqrt(3) with
/// exact rational coefficients.  Ring operations and zero tests are exact.
struct QSqrt3 {
  Rational a{0};
  Rational b{0};

  QSqrt3() = default;
  QSqrt3(int v) : a(v) {}  // NOLINT: implicit from int is intended
  QSqrt3(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}

  static QSqrt3 rational(long num, long den) { return QSqrt3(Rational(num, den), 0); }
  /// (num/den)*sqrt(3)
  static QSqrt3 sqrt3_times(long num, long den) { return QSqrt3(0, Rational(num, den)); }

  bool is_zero() const { return a == 0 && b == 0; }

  /// Exact sign of a + b*sqrt(3).
  int sign() const;

  double to_double() const;
  std::string str() const;
};

QSqrt3 operator+(const QSqrt3& x, const QSqrt3& y);
QSqrt3 operator-(const QSqrt3& x, const QSqrt3& y);
QSqrt3 operator-(const QSqrt3& x);
QSqrt3 operator*(const QSqrt3& x, const QSqrt3& y);
bool operator==(const QSqrt3& x, const QSqrt3& y);
inline bool operator!=(const QSqrt3& x, const QSqrt3& y) { return !(x == y); }
bool operator<(const QSqrt3& x, const QSqrt3& y);

/// Global irrational scale carried by a vector.  The eta conormals all share
/// a factor 1/sqrt(7) that lies outside Q(sqrt(3)); it is kept as a tag so
/// the coordinates stay in the field.  Sums across different tags are
/// rejected: boundary sums on L mix only nu vectors, sums on the rays T_k
/// mix only eta vectors.
enum class Scale { One, InvSqrt7 };

struct ExactVec3 {
  std::array<QSqrt3, 3> c{};
  Scale scale = Scale::One;

  ExactVec3() = default;
  ExactVec3(QSqrt3 x, QSqrt3 y, QSqrt3 z, Scale s = Scale::One)
      : c{std::move(x), std::move(y), std::move(z)}, scale(s) {}

  const QSqrt3& operator[](int i) const { return c[static_cast<size_t>(i)]; }
  QSqrt3& operator[](int i) { return c[static_cast<size_t>(i)]; }

  bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }

  /// Squared norm of the coordinate triple, excluding the scale tag.  A unit
  /// vector has norm_sq() == 1 under Scale::One and == 7 under Scale::InvSqrt7.
  QSqrt3 norm_sq() const;
  bool is_unit() const;

  Vec3 to_double() const;
  std::string str() const;
};

ExactVec3 operator+(const ExactVec3& x, const ExactVec3& y);  // throws on mixed scale
ExactVec3 operator-(const ExactVec3& x);
bool operator==(const ExactVec3& x, const ExactVec3& y);
inline bool operator!=(const ExactVec3& x, const ExactVec3& y) { return !(x == y); }

struct ExactMat3 {
  std::array<QSqrt3, 9> m{};

  const QSqrt3& operator()(int i, int j) const { return m[static_cast<size_t>(3 * i + j)]; }
  QSqrt3& operator()(int i, int j) { return m[static_cast<size_t>(3 * i + j)]; }

  static ExactMat3 identity();
  ExactMat3 transposed() const;
  QSqrt3 trace() const;
  Mat3 to_double() const;
};

ExactMat3 operator*(const ExactMat3& x, const ExactMat3& y);
ExactVec3 operator*(const ExactMat3& m, const ExactVec3& v);  // preserves the scale tag
bool operator==(const ExactMat3& x, const ExactMat3& y);
inline bool operator!=(const ExactMat3& x, const ExactMat3& y) { return !(x == y); }

}  // namespace varcheck
