#include "varcheck/weak_identity.hpp"

#include <cmath>
#include <stdexcept>

namespace varcheck {

namespace {

QuadratureGrid fit_window(QuadratureGrid grid, double support_radius) {
  // Chart radius never exceeds the ambient distance, so nodes beyond the
  // support radius contribute nothing.
  grid.r_out = std::min(grid.r_out, support_radius);
  return grid;
}

/// B integrand at one point, all three components.
inline void accumulate_residual(const SheetPoint& p, const TestFunction& phi, double w,
                                KahanSum acc[3]) {
  const TestFunction::Eval e = phi.eval(p.position, p.frame.T);
  if (e.value == 0.0 && e.grad_x.isZero(0.0) && e.grad_P.isZero(0.0)) return;
  for (int l = 0; l < 3; ++l) {
    double term = p.frame.T.row(l).dot(e.grad_x);
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) term += e.grad_P(j, k) * p.frame.A(l, j, k);
    term += e.value * p.frame.H[l];
    acc[l].add(term * p.area_jacobian * w);
  }
}

}  // namespace

double first_variation(const ScalarField& field, Selection sel, const VectorField& Y,
                       const QuadratureGrid& grid) {
  const QuadratureGrid g = fit_window(grid, Y.support_radius());
  KahanSum acc;
  for (const HalfSheet& half : sel.halves()) {
    for_each_chart_node(half, g, [&](double x1, double x2, double w) {
      if (x1 < kMinX1) return;
      const SheetPoint p = sheet_point(field, half.sheet_index, x1, x2);
      const VectorField::Eval e = Y.eval(p.position);
      const double div_t = (p.frame.T * e.jacobian).trace();
      acc.add(div_t * p.area_jacobian * w);
    });
  }
  return acc.value();
}

double distributional_boundary(const ScalarField& field, Selection E, const VectorField& Y,
                               const QuadratureGrid& grid) {
  const QuadratureGrid g = fit_window(grid, Y.support_radius());
  KahanSum acc;
  for (const HalfSheet& half : E.halves()) {
    for_each_chart_node(half, g, [&](double x1, double x2, double w) {
      if (x1 < kMinX1) return;
      const SheetPoint p = sheet_point(field, half.sheet_index, x1, x2);
      const VectorField::Eval e = Y.eval(p.position);
      const double div_t = (p.frame.T * e.jacobian).trace();
      acc.add(-(p.frame.H.dot(e.value) + div_t) * p.area_jacobian * w);
    });
  }
  return acc.value();
}

double distributional_boundary_closed_form(Selection E, const VectorField& Y,
                                           const LineRule& rule) {
  LineRule r = rule;
  r.s_max = std::min(r.s_max, Y.support_radius());
  KahanSum acc;
  for (const HalfSheet& half : E.halves()) {
    const Vec3 nu = conormal(half.sheet_index, half.side).to_double();
    const Vec3 et = eta(half.sheet_index, half.side).to_double();
    const CurveId lcurve = half.side == Side::Plus ? CurveId::LPlus : CurveId::LMinus;
    const CurveId tcurve = static_cast<CurveId>(static_cast<int>(CurveId::T1) +
                                                half.ray_index() - 1);
    acc.add(integrate_line(lcurve, [&](const Vec3& x) { return Y.value(x).dot(nu); }, r));
    acc.add(integrate_line(tcurve, [&](const Vec3& x) { return Y.value(x).dot(et); }, r));
  }
  return acc.value();
}

Vec3 curvature_residual(const ScalarField& field, Selection sel, const TestFunction& phi,
                        const QuadratureGrid& grid) {
  const QuadratureGrid g = fit_window(grid, phi.support_radius());
  KahanSum acc[3];
  for (const HalfSheet& half : sel.halves()) {
    for_each_chart_node(half, g, [&](double x1, double x2, double w) {
      if (x1 < kMinX1) return;
      const SheetPoint p = sheet_point(field, half.sheet_index, x1, x2);
      accumulate_residual(p, phi, w, acc);
    });
  }
  return {acc[0].value(), acc[1].value(), acc[2].value()};
}

Vec3 boundary_closed_form(Selection sel, const TestFunction& phi, const LineRule& rule) {
  if (!sel.full_sheets_only())
    throw std::invalid_argument(
        "boundary_closed_form: selection contains unmatched half-sheets");
  LineRule r = rule;
  r.s_max = std::min(r.s_max, phi.support_radius());
  Vec3 out = Vec3::Zero();
  for (int i = 1; i <= 6; ++i) {
    if (!sel.contains(i, Side::Plus)) continue;
    for (Side s : {Side::Plus, Side::Minus}) {
      const Vec3 nu = conormal(i, s).to_double();
      const CurveId curve = s == Side::Plus ? CurveId::LPlus : CurveId::LMinus;
      const Mat3 P = curve_plane_of_sheet(curve, i);
      const double mass =
          integrate_line(curve, [&](const Vec3& x) { return phi.value(x, P); }, r);
      out -= nu * mass;
    }
  }
  return out;
}

Vec3 recovered_boundary_atom(const ScalarField& field, Selection sel, const TestFunction& phi,
                             const QuadratureGrid& grid) {
  return -curvature_residual(field, sel, phi, grid);
}

namespace {

/// Smooth radial cutoff: 1 on B(0, eps), 0 outside B(0, 2 eps), with
/// |grad| <= 1.875 / eps <= 2 / eps.
struct RadialCutoff {
  double eps = 1.0;
  double value(double rho) const {
    if (rho <= eps) return 1.0;
    if (rho >= 2.0 * eps) return 0.0;
    const double s = (rho - eps) / eps;
    return 1.0 - s * s * s * (10.0 + s * (-15.0 + 6.0 * s));
  }
  double deriv(double rho) const {
    if (rho <= eps || rho >= 2.0 * eps) return 0.0;
    const double s = (rho - eps) / eps;
    return -30.0 * s * s * (1.0 - s) * (1.0 - s) / eps;
  }
};

/// psi_eps(x) * phi(x, P) with the product-rule spatial gradient.
class CutoffProduct : public TestFunction {
 public:
  CutoffProduct(const TestFunction& base, double eps) : base_(base), cut_{eps} {}
  Eval eval(const Vec3& x, const Mat3& P) const override {
    const double rho = x.norm();
    const double psi = cut_.value(rho);
    if (psi == 0.0) return {};
    Eval e = base_.eval(x, P);
    const double dpsi = cut_.deriv(rho);
    const Vec3 grad_psi = rho > 0.0 ? Vec3(dpsi / rho * x) : Vec3::Zero();
    e.grad_x = psi * e.grad_x + e.value * grad_psi;
    e.value *= psi;
    e.grad_P *= psi;
    return e;
  }
  double support_radius() const override {
    return std::min(2.0 * cut_.eps, base_.support_radius());
  }
  std::string id() const override { return base_.id() + "*cutoff"; }

 private:
  const TestFunction& base_;
  RadialCutoff cut_;
};

}  // namespace

std::vector<CutoffRow> cutoff_study(const ScalarField& field, Selection sel,
                                    const TestFunction& phi, const std::vector<double>& eps_list,
                                    int level) {
  std::vector<CutoffRow> rows;
  rows.reserve(eps_list.size());
  for (double eps : eps_list) {
    const CutoffProduct cut(phi, eps);
    // Scale-adapted window: the cutoff support is B(0, 2 eps).
    const QuadratureGrid grid = QuadratureGrid::for_level(level, 2.0 * eps);
    CutoffRow row;
    row.eps = eps;
    row.residual = curvature_residual(field, sel, cut, grid);
    row.norm = row.residual.norm();
    rows.push_back(row);
  }
  return rows;
}

double curvature_mass_in_ball(const ScalarField& field, Selection sel, double eps, int level) {
  const QuadratureGrid grid = QuadratureGrid::for_level(level, eps);
  const Region ball = BallRegion{Vec3::Zero(), eps};
  KahanSum acc;
  for (const HalfSheet& half : sel.halves()) {
    for_each_chart_node(half, grid, [&](double x1, double x2, double w) {
      if (x1 < kMinX1) return;
      const SheetPoint p = sheet_point(field, half.sheet_index, x1, x2);
      if (!region_membership(p.position, ball)) return;
      double frob = 0.0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k) frob += p.frame.A(i, j, k) * p.frame.A(i, j, k);
      acc.add(std::sqrt(frob) * p.area_jacobian * w);
    });
  }
  return acc.value();
}

}  // namespace varcheck
