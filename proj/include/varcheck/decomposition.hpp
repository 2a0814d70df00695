#pragma once

#include <map>
#include <string>
#include <vector>

#include "varcheck/sheets.hpp"

namespace varcheck {

/// Exact conormal sums of a half-sheet selection per junction curve:
/// Sigma_i^+ contributes nu_i^+ on L^+ and eta_i^+ on T_ceil(i/2);
/// Sigma_i^- contributes nu_i^- on L^- and eta_i^- on the same ray.
/// The distributional boundary of the selection vanishes iff every sum is
/// exactly zero.
struct BoundarySignature {
  ExactVec3 l_plus;   // nu family
  ExactVec3 l_minus;  // nu family
  ExactVec3 ray[3];   // eta family (1/sqrt(7) tag)

  BoundarySignature();
  bool is_zero() const;
};

BoundarySignature operator+(const BoundarySignature& a, const BoundarySignature& b);
bool operator==(const BoundarySignature& a, const BoundarySignature& b);

BoundarySignature boundary_signature(HalfSheetSet set);

/// All 4096 half-sheet subsets tested with exact zero tests; returns those
/// with vanishing signature, in mask order.
std::vector<HalfSheetSet> enumerate_boundary_free();

/// Minimal nonempty boundary-free sets under inclusion.  Also verifies that
/// they partition the full selection (the set-level form of the mass and
/// total-variation additivity a decomposition requires); throws on failure.
std::vector<HalfSheetSet> components();

/// One atom of the boundary measure of a full-sheet union, up to the common
/// H^1 line factor: the curve it sits on, the (exact) plane marking it in
/// the Grassmannian, and the exact conormal sum of the incident sheets.
struct GrassmannAtom {
  Side line_side = Side::Plus;  // L^+ or L^-
  ExactMat3 plane;
  std::vector<int> plane_sheets;  // sheets whose plane this is, for labeling
  ExactVec3 conormal_sum;
};

/// Groups the L-boundary contributions of a full-sheet union by line
/// component and exact plane equality and sums the conormals in each group;
/// zero groups are dropped.  An empty result is equivalent to the union
/// being a curvature varifold without boundary.  Rejects selections with
/// unmatched halves (their boundary also charges the rays).
std::vector<GrassmannAtom> grassmann_boundary_class(HalfSheetSet set);

struct SetClassification {
  HalfSheetSet set;
  bool boundary_free = false;
  bool component = false;        // minimal nonempty boundary-free
  bool indecomposable = false;   // no proper nonempty boundary-free subset
  bool curvature_no_boundary = false;  // empty Grassmann boundary class
  int grassmann_atoms = 0;
};

struct ClassificationReport {
  std::vector<SetClassification> sets;  // the boundary-free sets
  std::vector<HalfSheetSet> component_list;
  bool unique_decomposition = false;
  std::string conclusion;
};

/// Classifies every boundary-free set and renders the verdict: the full
/// union decomposes uniquely into the two triples, and neither triple is a
/// curvature varifold without boundary.
ClassificationReport classification_report();

}  // namespace varcheck
