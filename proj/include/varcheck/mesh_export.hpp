#pragma once

#include <ostream>

#include "varcheck/scalar_field.hpp"

namespace varcheck {

struct MeshExportOptions {
  double window_radius = 4.0;
  int rings = 48;        // radial samples, geometric toward the origin
  int segments = 96;     // angular samples across the chart
  double inner_radius_factor = 1.0 / 1024.0;
};

/// Samples the six sheets over the chart window into indexed triangle
/// meshes, plain-text OBJ, one `o` object per sheet.  Chart boundary rows
/// (x1 = 0) use the continuous extension so adjacent sheets meet along L.
void export_sheets_obj(const ScalarField& field, std::ostream& os,
                       const MeshExportOptions& options);

}  // namespace varcheck
