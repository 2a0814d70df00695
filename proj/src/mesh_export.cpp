#include "varcheck/mesh_export.hpp"

#include <cmath>
#include <iomanip>
#include <stdexcept>

#include "varcheck/sheets.hpp"

namespace varcheck {

namespace {

double graph_height(const ScalarField& field, double x1, double x2) {
  if (x1 < kMinX1) return 0.0;  // continuous extension onto L away from 0
  return field.eval(x1, x2);
}

}  // namespace

void export_sheets_obj(const ScalarField& field, std::ostream& os,
                       const MeshExportOptions& options) {
  if (!(options.window_radius > 0.0) || options.rings < 2 || options.segments < 2)
    throw std::invalid_argument("export_sheets_obj: empty window");

  os << "# six graph sheets over the half-plane chart, window radius "
     << options.window_radius << "\n";
  os << std::setprecision(12);

  const double r_out = options.window_radius;
  const double r_in = r_out * options.inner_radius_factor;
  const double ratio = std::pow(r_in / r_out, 1.0 / (options.rings - 1));

  long base = 1;  // OBJ indices are global and 1-based
  for (int i = 1; i <= 6; ++i) {
    const Sheet& s = sheet(i);
    os << "o sheet_" << i << "\n";
    for (int ring = 0; ring < options.rings; ++ring) {
      const double r = r_out * std::pow(ratio, options.rings - 1 - ring);
      for (int seg = 0; seg <= options.segments; ++seg) {
        const double th = -M_PI_2 + M_PI * seg / options.segments;
        const double x1 = r * std::cos(th);
        const double x2 = r * std::sin(th);
        const Vec3 p = s.isometry * Vec3(x1, x2, graph_height(field, x1, x2));
        os << "v " << p[0] << " " << p[1] << " " << p[2] << "\n";
      }
    }
    const int stride = options.segments + 1;
    for (int ring = 0; ring + 1 < options.rings; ++ring) {
      for (int seg = 0; seg < options.segments; ++seg) {
        const long a = base + ring * stride + seg;
        const long b = a + 1;
        const long c = a + stride;
        const long d = c + 1;
        os << "f " << a << " " << b << " " << d << "\n";
        os << "f " << a << " " << d << " " << c << "\n";
      }
    }
    base += static_cast<long>(options.rings) * stride;
  }
}

}  // namespace varcheck
