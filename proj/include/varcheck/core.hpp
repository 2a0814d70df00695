#pragma once

#include <Eigen/Dense>

namespace varcheck {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;

/// Which side of the junction line L a half-sheet lies on (sign of the
/// ambient x2 coordinate).
enum class Side { Plus, Minus };

inline constexpr int side_index(Side s) { return s == Side::Plus ? 0 : 1; }
inline constexpr double side_sign(Side s) { return s == Side::Plus ? 1.0 : -1.0; }
inline constexpr Side opposite(Side s) { return s == Side::Plus ? Side::Minus : Side::Plus; }

inline constexpr double kSqrt3 = 1.7320508075688772935;

/// Evaluations of g and its derivatives require x1 strictly positive; the
/// graph extends smoothly to the closed half-plane only away from the origin.
inline constexpr double kMinX1 = 1e-12;

inline const char* library_version() { return "0.1.0"; }

}  // namespace varcheck
