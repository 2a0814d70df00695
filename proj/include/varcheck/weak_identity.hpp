#pragma once

#include "varcheck/quadrature.hpp"
#include "varcheck/test_function.hpp"

namespace varcheck {

/// First variation of the selected half-sheets: sum of the surface
/// integrals of div_T Y = trace(T DY).
double first_variation(const ScalarField& field, Selection sel, const VectorField& Y,
                       const QuadratureGrid& grid);

/// Distributional boundary of the selection E inside the full varifold,
/// computed as -int_E <H, Y> - delta(V restricted to E)(Y).  Uses that the
/// full first variation has no singular part, with density the sheetwise
/// mean curvature.
double distributional_boundary(const ScalarField& field, Selection E, const VectorField& Y,
                               const QuadratureGrid& grid);

/// Line-integral form of the distributional boundary: each included half
/// Sigma_i^s contributes <Y, nu_i^s> on L^s and <Y, eta_i^s> on its ray.
double distributional_boundary_closed_form(Selection E, const VectorField& Y,
                                           const LineRule& rule = {});

/// The curvature-varifold functional
///   B_l(sel, phi) = sum over half-sheets of
///     int T_lj D_j phi + D*_jk phi A_ljk + phi A_jlj  d mu.
/// For a curvature varifold with boundary this equals -int phi d(boundary_l).
Vec3 curvature_residual(const ScalarField& field, Selection sel, const TestFunction& phi,
                        const QuadratureGrid& grid);

/// What B must equal for a union of full sheets:
///   - sum_i [ nu_i^+ int_{L+} phi(x, P_i^+) + nu_i^- int_{L-} phi(x, P_i^-) ].
/// Rejects selections with unmatched halves (the ray terms only cancel
/// between the two halves of a full sheet).
Vec3 boundary_closed_form(Selection sel, const TestFunction& phi, const LineRule& rule = {});

/// The boundary atom a planar-support test function reads off: -B(sel, phi).
/// For sel = Z1 and phi centered at P_1^+ this recovers nu_1^+.
Vec3 recovered_boundary_atom(const ScalarField& field, Selection sel, const TestFunction& phi,
                             const QuadratureGrid& grid);

// ---------------------------------------------------------------------------
// Origin cutoff study.
// ---------------------------------------------------------------------------

struct CutoffRow {
  double eps = 0.0;
  Vec3 residual = Vec3::Zero();  // B(sel, psi_eps * phi)
  double norm = 0.0;
};

/// B of the near-origin part psi_eps * phi for a decreasing eps list, with the
/// cutoff 1 on B(0, eps), supported in B(0, 2 eps) and |grad psi_eps| <=
/// 2/eps.  The quadrature window scales with eps.
std::vector<CutoffRow> cutoff_study(const ScalarField& field, Selection sel,
                                    const TestFunction& phi, const std::vector<double>& eps_list,
                                    int level);

/// Integral of the Frobenius norm of A over the ball B(0, eps) (all sheets
/// of the selection); tends to 0 linearly in eps.
double curvature_mass_in_ball(const ScalarField& field, Selection sel, double eps, int level);

}  // namespace varcheck
