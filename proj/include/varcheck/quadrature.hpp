#pragma once

#include <cmath>
#include <functional>

#include "varcheck/gauss.hpp"
#include "varcheck/sheets.hpp"

namespace varcheck {

/// Polar-annular chart grid.  Radial shells are dyadic toward the origin
/// (g is 1-homogeneous, so the curvature data is scale-invariant along rays
/// and the error equidistributes over dyadic shells); angular cells split
/// each fundamental sector between the junction directions theta = 0 (the
/// ray T_k) and theta = +-pi/4 (the cone boundary), so no node ever lands
/// on a junction and integrands stay piecewise smooth per cell.
struct QuadratureGrid {
  double r_out = 4.0;
  /// Inner radius; 0 selects the dyadic window r_out * 2^-dyadic_annuli.
  double r_in = 0.0;
  int dyadic_annuli = 12;
  int angular_subdiv = 16;  // cells per fundamental sector
  /// Radial Gauss panels in the outermost shell; deeper shells use panel
  /// counts proportional to their width (minimum one), so resolution is
  /// uniform in r where the test-function profiles live and geometric into
  /// the curvature singularity at the origin.
  int radial_subdiv = 16;
  int gauss_order = 6;
  int level = 4;

  static QuadratureGrid for_level(int level, double r_out) {
    QuadratureGrid g;
    g.level = level;
    g.r_out = r_out;
    g.dyadic_annuli = 4 + 2 * level;
    g.angular_subdiv = 2 << level;
    g.radial_subdiv = 1 << level;
    g.gauss_order = std::min(4 + level, 12);
    return g;
  }
  QuadratureGrid refined() const { return for_level(level + 1, r_out); }
  double inner_radius() const {
    return r_in > 0.0 ? r_in : r_out * std::ldexp(1.0, -dyadic_annuli);
  }
};

/// Visits every chart quadrature node of a half-sheet.  The callback
/// receives the chart coordinates and the chart measure weight
/// (r dr dtheta); surface integrals multiply by the area Jacobian.
template <typename F>
void for_each_chart_node(const HalfSheet& half, const QuadratureGrid& grid, F&& fn) {
  const GaussRule& rule = gauss_rule(grid.gauss_order);
  const int cs = half.chart_sign();
  const double r_hi = grid.r_out;
  const double r_lo = grid.inner_radius();
  const double ratio = std::pow(r_lo / r_hi, 1.0 / grid.dyadic_annuli);
  const double kQuarterPi = 0.78539816339744830962;
  const double sector_edges[3] = {0.0, kQuarterPi, 2.0 * kQuarterPi};

  const double width0 = r_hi - r_hi * ratio;
  for (int shell = 0; shell < grid.dyadic_annuli; ++shell) {
    const double rb = r_hi * std::pow(ratio, shell);
    const double ra = r_hi * std::pow(ratio, shell + 1);
    const int panels =
        std::max(1, static_cast<int>(std::lround(grid.radial_subdiv * (rb - ra) / width0)));
    for (int panel = 0; panel < panels; ++panel) {
      const double pa = ra + (rb - ra) * panel / panels;
      const double pb = ra + (rb - ra) * (panel + 1) / panels;
      for (int sec = 0; sec < 2; ++sec) {
        for (int cell = 0; cell < grid.angular_subdiv; ++cell) {
          const double ta = sector_edges[sec] +
                            (sector_edges[sec + 1] - sector_edges[sec]) * cell /
                                grid.angular_subdiv;
          const double tb = sector_edges[sec] +
                            (sector_edges[sec + 1] - sector_edges[sec]) * (cell + 1) /
                                grid.angular_subdiv;
          for (size_t ir = 0; ir < rule.nodes.size(); ++ir) {
            const double r = 0.5 * (pa + pb) + 0.5 * (pb - pa) * rule.nodes[ir];
            const double wr = 0.5 * (pb - pa) * rule.weights[ir];
            for (size_t it = 0; it < rule.nodes.size(); ++it) {
              const double th = 0.5 * (ta + tb) + 0.5 * (tb - ta) * rule.nodes[it];
              const double wt = 0.5 * (tb - ta) * rule.weights[it];
              const double x1 = r * std::cos(th);
              const double x2 = cs * r * std::sin(th);
              fn(x1, x2, r * wr * wt);
            }
          }
        }
      }
    }
  }
}

using SurfaceIntegrand = std::function<double(const SheetPoint&)>;

/// Surface integral over one half-sheet restricted to an ambient region.
double integrate_half_sheet(const ScalarField& field, const HalfSheet& half,
                            const Region& region, const SurfaceIntegrand& integrand,
                            const QuadratureGrid& grid);

/// Surface integral over a full sheet (both halves).
double integrate_sheet(const ScalarField& field, int sheet_index, const Region& region,
                       const SurfaceIntegrand& integrand, const QuadratureGrid& grid);

struct CheckedIntegral {
  double value = 0.0;
  double coarse_value = 0.0;
  bool converged = false;
};

/// Same integral at the grid and one level coarser; flags non-convergence
/// when the two disagree beyond rel_tol.
CheckedIntegral integrate_sheet_checked(const ScalarField& field, int sheet_index,
                                        const Region& region, const SurfaceIntegrand& integrand,
                                        const QuadratureGrid& grid, double rel_tol = 0.01);

// ---------------------------------------------------------------------------
// Line quadrature along the junction curves.
// ---------------------------------------------------------------------------

enum class CurveId { LPlus, LMinus, T1, T2, T3 };

/// Arclength parametrization of the open rays (s > 0).
Vec3 curve_point(CurveId curve, double s);

/// The tangent plane the sheets carry along a curve: P_i^{+-} on L^{+-}.
/// (Along T_k the two incident sheets meet transversally; no single plane.)
Mat3 curve_plane_of_sheet(CurveId curve, int sheet_index);

struct LineRule {
  double s_max = 8.0;
  int panels = 256;
  int gauss_order = 10;
};

double integrate_line(CurveId curve, const std::function<double(const Vec3&)>& integrand,
                      const LineRule& rule = {});

// ---------------------------------------------------------------------------
// Chart-space trapezoid quadrature (exact cells for straight chart edges).
// ---------------------------------------------------------------------------

/// {a < x1 < b, lo(x1) < x2 < hi(x1)} with affine lo(x) = lo0 + lo1 x,
/// hi(x) = hi0 + hi1 x.
struct ChartTrapezoid {
  double a = 1.0, b = 2.0;
  double lo0 = 0.0, lo1 = 1.0;
  double hi0 = 3.0, hi1 = 0.0;
};

double integrate_sheet_chart_trapezoid(const ScalarField& field, int sheet_index,
                                       const ChartTrapezoid& region,
                                       const SurfaceIntegrand& integrand, int gauss_order = 12,
                                       int subdivisions = 8);

}  // namespace varcheck
