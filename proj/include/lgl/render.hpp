#pragma once

#include <string>

#include "lgl/lattice.hpp"

namespace lgl {

// SVG 1.1 picture of a tiling in the plane embedding, one polygon per
// lozenge coloured by orientation, with the domain boundary drawn on top.
std::string render_svg(const Tiling& t, double scale = 24.0);

// Just the domain boundary (useful for untiled or infeasible domains).
std::string render_svg(const Domain& d, double scale = 24.0);

}  // namespace lgl
