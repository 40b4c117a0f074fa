#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minsurf/weierstrass.hpp"

namespace minsurf {

using Face = std::array<int, 3>;

// Triangulated parameter domain: annular fans around each puncture glued to
// a central region by a Delaunay triangulation.
struct ParamTriangulation {
  std::vector<Complex> nodes;
  std::vector<Face> triangles;  // counter-clockwise in the z-plane
  double r_min = 0.0;
  double r_max = 0.0;  // after any automatic shrink
  std::vector<std::string> warnings;
};

// Rings at radii r_min * 1.3^i (capped by r_max) with res nodes each around
// every finite puncture, and in w = 1/z around infinity. Overlapping fans
// shrink r_max and record a warning.
ParamTriangulation sample_domain(const WeierstrassData& w, double r_min, double r_max, int res);

struct SurfaceMesh {
  std::vector<std::vector<double>> vertices;
  std::vector<Face> faces;
  std::vector<Complex> param;
};

// Evaluates the immersion at every node. threads = 0 picks the hardware
// concurrency; the result does not depend on it.
SurfaceMesh build_mesh(const WeierstrassData& w, const ParamTriangulation& tri, unsigned threads = 0);

// Zero-based coordinate axes written as x, y, z.
using Projection = std::array<int, 3>;

// The three axes of largest vertex variance, in increasing axis order.
Projection default_projection(const SurfaceMesh& mesh);

// Writes `v`/`f` lines (1-based) with 17 significant digits. For n > 3 the
// full coordinates go to path + ".coords.tsv". Throws IoError.
void export_obj(const SurfaceMesh& mesh, const std::string& path, std::optional<Projection> projection = std::nullopt);
std::string sidecar_path(const std::string& obj_path);

struct ObjData {
  std::vector<std::array<double, 3>> vertices;
  std::vector<Face> faces;  // zero-based
};

// Reads `v` and `f` records; other records are skipped. Throws ParseError.
ObjData parse_obj(std::string_view text);

}  // namespace minsurf
