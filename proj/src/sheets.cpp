#include "varcheck/sheets.hpp"

#include <sstream>
#include <stdexcept>

namespace varcheck {

namespace {

Sheet make_sheet(int index, std::vector<IsometryStep> word) {
  Sheet s;
  s.index = index;
  s.word = std::move(word);
  for (IsometryStep step : s.word) {
    const ExactMat3& m =
        step == IsometryStep::Rotation ? rotation_matrix() : reflection_matrix();
    s.isometry_exact = s.isometry_exact * m;
    if (step == IsometryStep::Reflection) s.x2_parity = -s.x2_parity;
  }
  s.isometry = s.isometry_exact.to_double();
  return s;
}

}  // namespace

const Sheet& sheet(int i) {
  using Step = IsometryStep;
  static const Sheet sheets[6] = {
      make_sheet(1, {}),
      make_sheet(2, {Step::Reflection}),
      make_sheet(3, {Step::Rotation}),
      make_sheet(4, {Step::Rotation, Step::Reflection}),
      make_sheet(5, {Step::Rotation, Step::Rotation}),
      make_sheet(6, {Step::Rotation, Step::Rotation, Step::Reflection}),
  };
  if (i < 1 || i > 6) throw std::out_of_range("sheet index must be in 1..6");
  return sheets[i - 1];
}

SheetPoint sheet_point(const ScalarField& field, int sheet_index, double x1, double x2) {
  const Sheet& s = sheet(sheet_index);
  const double g = field.eval(x1, x2);
  const Vec2 grad = field.grad(x1, x2);
  const Mat2 hess = field.hess(x1, x2);
  SheetPoint p;
  p.position = s.isometry * Vec3(x1, x2, g);
  p.frame = pushforward_frame(s.isometry, chart_frame(grad, hess));
  p.area_jacobian = std::sqrt(1.0 + grad.squaredNorm());
  return p;
}

bool HalfSheetSet::full_sheets_only() const {
  for (int i = 1; i <= 6; ++i) {
    const bool plus = contains(i, Side::Plus);
    const bool minus = contains(i, Side::Minus);
    if (plus != minus) return false;
  }
  return true;
}

std::vector<HalfSheet> HalfSheetSet::halves() const {
  std::vector<HalfSheet> out;
  for (int i = 1; i <= 6; ++i)
    for (Side s : {Side::Plus, Side::Minus})
      if (contains(i, s)) out.push_back({i, s});
  return out;
}

std::string HalfSheetSet::str() const {
  if (mask == 0) return "{}";
  if (*this == all()) return "V";
  if (*this == z1()) return "Z1";
  if (*this == z2()) return "Z2";
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const HalfSheet& h : halves()) {
    if (!first) os << ",";
    first = false;
    os << "S" << h.sheet_index << (h.side == Side::Plus ? "+" : "-");
  }
  os << "}";
  return os.str();
}

namespace {

const double kCosSq = 3.0 / 7.0;

bool in_cone(const Vec3& x, int k) {
  if (x.squaredNorm() == 0.0) throw std::invalid_argument("cone membership undefined at x = 0");
  const Vec3 t = ConormalTable::instance().ray(k).to_double();
  const double d = x.dot(t);
  if (d <= 0.0) return false;
  return d * d > kCosSq * x.squaredNorm();
}

}  // namespace

bool region_membership(const Vec3& x, const Region& region) {
  return std::visit(
      [&x](const auto& r) -> bool {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, AllSpace>) {
          return true;
        } else if constexpr (std::is_same_v<R, BallRegion>) {
          return (x - r.center).norm() < r.radius;
        } else if constexpr (std::is_same_v<R, HalfSpaceRegion>) {
          return r.normal.dot(x) > r.offset;
        } else if constexpr (std::is_same_v<R, ConeRegion>) {
          return in_cone(x, r.k);
        } else if constexpr (std::is_same_v<R, ComplementD>) {
          // Open complement of the closed cone union.
          for (int k = 1; k <= 3; ++k) {
            if (x.squaredNorm() == 0.0) return false;  // origin is in every closed cone's closure
            const Vec3 t = ConormalTable::instance().ray(k).to_double();
            const double d = x.dot(t);
            if (d > 0.0 && d * d >= kCosSq * x.squaredNorm()) return false;
          }
          return true;
        } else {
          for (const Region& part : r.parts)
            if (!region_membership(x, part)) return false;
          return true;
        }
      },
      region);
}

}  // namespace varcheck
