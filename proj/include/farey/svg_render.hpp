#pragma once

#include <optional>
#include <string>
#include <vector>

#include "farey/decoration.hpp"
#include "farey/triangulation.hpp"

namespace farey {

struct RenderOptions {
  int size_px = 800;
  bool draw_vertices = true;
  Int vertex_den_cap = 8;  // label dots only up to this denominator
};

// Poincaré disk picture of a windowed triangulation via z -> (z - i)/(z + i):
// edges as circular arcs orthogonal to the boundary circle, horocycles as
// circles. Deterministic byte output for fixed inputs.
std::string render_svg(const WindowTriangulation& t, const std::optional<Decoration>& dec = {},
                       const RenderOptions& opt = {});

}  // namespace farey
