#include "varcheck/quadrature.hpp"

#include <stdexcept>

namespace varcheck {

double integrate_half_sheet(const ScalarField& field, const HalfSheet& half,
                            const Region& region, const SurfaceIntegrand& integrand,
                            const QuadratureGrid& grid) {
  KahanSum acc;
  const bool everywhere = std::holds_alternative<AllSpace>(region);
  for_each_chart_node(half, grid, [&](double x1, double x2, double w) {
    if (x1 < kMinX1) return;
    const SheetPoint p = sheet_point(field, half.sheet_index, x1, x2);
    if (!everywhere && !region_membership(p.position, region)) return;
    acc.add(integrand(p) * p.area_jacobian * w);
  });
  return acc.value();
}

double integrate_sheet(const ScalarField& field, int sheet_index, const Region& region,
                       const SurfaceIntegrand& integrand, const QuadratureGrid& grid) {
  return integrate_half_sheet(field, {sheet_index, Side::Plus}, region, integrand, grid) +
         integrate_half_sheet(field, {sheet_index, Side::Minus}, region, integrand, grid);
}

CheckedIntegral integrate_sheet_checked(const ScalarField& field, int sheet_index,
                                        const Region& region, const SurfaceIntegrand& integrand,
                                        const QuadratureGrid& grid, double rel_tol) {
  CheckedIntegral out;
  QuadratureGrid coarse = QuadratureGrid::for_level(std::max(1, grid.level - 1), grid.r_out);
  coarse.r_in = grid.r_in;
  out.coarse_value = integrate_sheet(field, sheet_index, region, integrand, coarse);
  out.value = integrate_sheet(field, sheet_index, region, integrand, grid);
  const double scale = std::max({std::abs(out.value), std::abs(out.coarse_value), 1e-14});
  out.converged = std::abs(out.value - out.coarse_value) <= rel_tol * scale;
  return out;
}

Vec3 curve_point(CurveId curve, double s) {
  switch (curve) {
    case CurveId::LPlus:
      return {0.0, s, 0.0};
    case CurveId::LMinus:
      return {0.0, -s, 0.0};
    case CurveId::T1:
    case CurveId::T2:
    case CurveId::T3: {
      const int k = static_cast<int>(curve) - static_cast<int>(CurveId::T1) + 1;
      return s * ConormalTable::instance().ray(k).to_double();
    }
  }
  throw std::logic_error("unreachable");
}

Mat3 curve_plane_of_sheet(CurveId curve, int sheet_index) {
  if (curve == CurveId::LPlus) return plane_projection(sheet_index, Side::Plus).to_double();
  if (curve == CurveId::LMinus) return plane_projection(sheet_index, Side::Minus).to_double();
  throw std::invalid_argument("no single tangent plane along the rays T_k");
}

double integrate_line(CurveId curve, const std::function<double(const Vec3&)>& integrand,
                      const LineRule& rule) {
  const GaussRule& gr = gauss_rule(rule.gauss_order);
  KahanSum acc;
  for (int p = 0; p < rule.panels; ++p) {
    const double a = rule.s_max * p / rule.panels;
    const double b = rule.s_max * (p + 1) / rule.panels;
    for (size_t i = 0; i < gr.nodes.size(); ++i) {
      const double s = 0.5 * (a + b) + 0.5 * (b - a) * gr.nodes[i];
      const double w = 0.5 * (b - a) * gr.weights[i];
      acc.add(integrand(curve_point(curve, s)) * w);
    }
  }
  return acc.value();
}

double integrate_sheet_chart_trapezoid(const ScalarField& field, int sheet_index,
                                       const ChartTrapezoid& region,
                                       const SurfaceIntegrand& integrand, int gauss_order,
                                       int subdivisions) {
  const GaussRule& gr = gauss_rule(gauss_order);
  KahanSum acc;
  for (int px = 0; px < subdivisions; ++px) {
    const double xa = region.a + (region.b - region.a) * px / subdivisions;
    const double xb = region.a + (region.b - region.a) * (px + 1) / subdivisions;
    for (size_t ix = 0; ix < gr.nodes.size(); ++ix) {
      const double x1 = 0.5 * (xa + xb) + 0.5 * (xb - xa) * gr.nodes[ix];
      const double wx = 0.5 * (xb - xa) * gr.weights[ix];
      const double lo = region.lo0 + region.lo1 * x1;
      const double hi = region.hi0 + region.hi1 * x1;
      if (hi <= lo) continue;
      for (int py = 0; py < subdivisions; ++py) {
        const double ya = lo + (hi - lo) * py / subdivisions;
        const double yb = lo + (hi - lo) * (py + 1) / subdivisions;
        for (size_t iy = 0; iy < gr.nodes.size(); ++iy) {
          const double x2 = 0.5 * (ya + yb) + 0.5 * (yb - ya) * gr.nodes[iy];
          const double wy = 0.5 * (yb - ya) * gr.weights[iy];
          if (x1 < kMinX1) continue;
          const SheetPoint p = sheet_point(field, sheet_index, x1, x2);
          acc.add(integrand(p) * p.area_jacobian * wx * wy);
        }
      }
    }
  }
  return acc.value();
}

}  // namespace varcheck
