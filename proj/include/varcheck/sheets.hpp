#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "varcheck/conormal_table.hpp"
#include "varcheck/scalar_field.hpp"
#include "varcheck/tangent.hpp"

namespace varcheck {

enum class IsometryStep { Rotation, Reflection };

/// One of the six sheets: the base graph chart {x1 > 0} composed with a word
/// over {rotation, reflection}.  Words, left to right, are applied last to
/// first: sheet 4 = rotation(reflection(sheet 1)).
struct Sheet {
  int index = 1;
  std::vector<IsometryStep> word;
  Mat3 isometry = Mat3::Identity();
  ExactMat3 isometry_exact = ExactMat3::identity();
  /// +1 when the word preserves the sign of x2, -1 when it flips it
  /// (odd number of reflections).
  int x2_parity = 1;
};

/// Sheets 1..6: id, sigma, rho, rho*sigma, rho^2, rho^2*sigma.
const Sheet& sheet(int i);

/// A half-sheet is the part of a sheet on one ambient side of the junction
/// line: Sigma_i ^ {+-} = Sigma_i intersect {+-x2 > 0}.  For sheets whose
/// word contains the reflection, the chart half is the mirrored one.
struct HalfSheet {
  int sheet_index = 1;
  Side side = Side::Plus;

  /// Sign of the chart x2 coordinate covering this half.
  int chart_sign() const { return static_cast<int>(side_sign(side)) * sheet(sheet_index).x2_parity; }
  /// Ray T_k bounding this half along the cone axis.
  int ray_index() const { return ConormalTable::ray_of_sheet(sheet_index); }
};

/// Position, pushed-forward tangent data and area element of a sheet point
/// over chart coordinates (x1, x2).
struct SheetPoint {
  Vec3 position = Vec3::Zero();
  TangentFrame frame;
  double area_jacobian = 1.0;  // sqrt(1 + |grad g|^2)
};

SheetPoint sheet_point(const ScalarField& field, int sheet_index, double x1, double x2);

// ---------------------------------------------------------------------------
// Half-sheet selections: 12-bit masks over {Sigma_i^{+-}}.
// ---------------------------------------------------------------------------

struct HalfSheetSet {
  std::uint16_t mask = 0;

  static constexpr int bit_of(int sheet_index, Side s) {
    return 2 * (sheet_index - 1) + side_index(s);
  }
  static HalfSheetSet empty_set() { return {0}; }
  static HalfSheetSet all() { return {0x0FFF}; }
  static HalfSheetSet half(int sheet_index, Side s) {
    return {static_cast<std::uint16_t>(1u << bit_of(sheet_index, s))};
  }
  static HalfSheetSet full_sheet(int sheet_index) {
    return {static_cast<std::uint16_t>(3u << (2 * (sheet_index - 1)))};
  }
  /// Z1 = sheets 1, 3, 5 (both halves); Z2 = sheets 2, 4, 6.
  static HalfSheetSet z1() { return {0x0333}; }
  static HalfSheetSet z2() { return {0x0CCC}; }

  bool contains(int sheet_index, Side s) const {
    return (mask >> bit_of(sheet_index, s)) & 1u;
  }
  bool empty() const { return mask == 0; }
  int count() const { return __builtin_popcount(mask); }
  bool subset_of(const HalfSheetSet& other) const { return (mask & ~other.mask) == 0; }
  /// True when every included sheet has both halves included.
  bool full_sheets_only() const;
  HalfSheetSet complement() const { return {static_cast<std::uint16_t>(~mask & 0x0FFF)}; }

  std::vector<HalfSheet> halves() const;
  std::string str() const;
};

inline bool operator==(const HalfSheetSet& a, const HalfSheetSet& b) { return a.mask == b.mask; }
inline HalfSheetSet operator|(const HalfSheetSet& a, const HalfSheetSet& b) {
  return {static_cast<std::uint16_t>(a.mask | b.mask)};
}
inline HalfSheetSet operator&(const HalfSheetSet& a, const HalfSheetSet& b) {
  return {static_cast<std::uint16_t>(a.mask & b.mask)};
}

/// Selections used by the weak-identity functionals carry multiplicity one
/// per half-sheet; they are the same masks.
using Selection = HalfSheetSet;

// ---------------------------------------------------------------------------
// Regions of ambient space.
// ---------------------------------------------------------------------------

struct BallRegion {
  Vec3 center = Vec3::Zero();
  double radius = 1.0;
};
/// Open half-space {<normal, x> > offset}.
struct HalfSpaceRegion {
  Vec3 normal = Vec3::UnitY();
  double offset = 0.0;
};
/// Open cone C_k around the ray T_k with aperture cos^-1(sqrt(3/7)).
struct ConeRegion {
  int k = 1;
};
/// Open complement D of the union of the closed cones.
struct ComplementD {};
struct AllSpace {};
struct IntersectionRegion;

using Region =
    std::variant<AllSpace, BallRegion, HalfSpaceRegion, ConeRegion, ComplementD, IntersectionRegion>;

struct IntersectionRegion {
  std::vector<Region> parts;
};

/// Membership with the open-cone convention (strict inequalities).  Cone
/// tests reject x = 0.
bool region_membership(const Vec3& x, const Region& region);

inline Region half_space_x2(Side s) {
  return HalfSpaceRegion{side_sign(s) * Vec3::UnitY(), 0.0};
}

}  // namespace varcheck
