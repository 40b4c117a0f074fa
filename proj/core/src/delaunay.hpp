#pragma once

#include <array>
#include <span>
#include <vector>

#include "minsurf/complex_poly.hpp"

namespace minsurf::detail {

// Delaunay triangulation of distinct points (Bowyer-Watson). Triangles are
// counter-clockwise index triples into pts, sorted.
std::vector<std::array<int, 3>> delaunay(std::span<const Complex> pts);

}  // namespace minsurf::detail
