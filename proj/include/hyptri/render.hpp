#pragma once

#include <string>
#include <vector>

#include "hyptri/trig.hpp"

namespace hyptri {

struct RenderOptions {
  Model model = Model::Klein;  // Klein or Poincare
  std::vector<std::string> centers;  // names accepted by center_table
  bool euler_line = false;  // full geodesic through O and Z
};

// Deterministic SVG text. Centers that are not real points are omitted.
std::string render_svg(const TriangleData& t, const RenderOptions& opt);
// Writes render_svg to `path`; throws IoFailure.
void render_svg(const TriangleData& t, const RenderOptions& opt, const std::string& path);

}  // namespace hyptri
