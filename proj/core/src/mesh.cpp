#include "minsurf/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <thread>

#include "delaunay.hpp"
#include "minsurf/errors.hpp"

namespace minsurf {

namespace {

constexpr double kRingRatio = 1.3;

bool fans_fit(const std::vector<Complex>& finite, bool inf, double r) {
  for (size_t i = 0; i < finite.size(); ++i) {
    for (size_t j = i + 1; j < finite.size(); ++j) {
      if (std::abs(finite[i] - finite[j]) < 2.0 * r) return false;
    }
    if (inf && std::abs(finite[i]) + r > 1.0 / r) return false;
  }
  return true;
}

std::vector<double> ring_radii(double r_min, double r_max) {
  std::vector<double> out;
  for (double r = r_min; r < r_max * (1.0 - 1e-9); r *= kRingRatio) out.push_back(r);
  out.push_back(r_max);
  return out;
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

}  // namespace

ParamTriangulation sample_domain(const WeierstrassData& w, double r_min, double r_max, int res) {
  if (!(r_min > 0.0 && r_min < r_max)) throw DegenerateInput("mesh radii need 0 < r_min < r_max");
  if (res < 8) throw DegenerateInput("mesh resolution must be at least 8");

  const std::vector<Complex> finite = w.finite_punctures();
  const bool inf = w.has_end_at_infinity();
  ParamTriangulation out;
  out.r_min = r_min;

  double r = r_max;
  while (!fans_fit(finite, inf, r)) r *= 0.8;
  if (r < r_max) {
    if (r <= r_min * kRingRatio) {
      throw DegenerateInput("punctures too close for r_min = " + fmt(r_min));
    }
    out.warnings.push_back("end annuli overlap; r_max reduced from " + fmt(r_max) + " to " + fmt(r));
  }
  out.r_max = r;

  const std::vector<double> radii = ring_radii(r_min, r);
  const double step = 2.0 * std::numbers::pi / res;
  std::vector<Complex> nodes;
  for (Complex p : finite) {
    for (size_t i = 0; i < radii.size(); ++i) {
      for (int j = 0; j < res; ++j) nodes.push_back(p + std::polar(radii[i], step * (j + 0.5 * (i % 2))));
    }
  }
  if (inf) {
    for (size_t i = 0; i < radii.size(); ++i) {
      for (int j = 0; j < res; ++j) nodes.push_back(std::polar(1.0 / radii[i], step * (j + 0.5 * (i % 2))));
    }
  }

  // Central polar grid, thinned out next to the fans.
  double reach = 1.0;
  for (Complex p : finite) reach = std::max(reach, std::abs(p) + 2.0 * r);
  const double central = inf ? 1.0 / r : 2.0 * reach;
  const int rings = std::max(4, res / 4);
  auto near_fan = [&](Complex z) {
    for (Complex p : finite) {
      if (std::abs(z - p) < 1.1 * r) return true;
    }
    return inf && std::abs(z) > central / 1.1;
  };
  if (!near_fan(0.0)) nodes.push_back(0.0);
  for (int j = 1; j <= rings; ++j) {
    const double rho = central * j / rings;
    const int count = std::max(8, static_cast<int>(std::ceil(static_cast<double>(res) * j / rings)));
    for (int k = 0; k < count; ++k) {
      const Complex z = std::polar(rho, 2.0 * std::numbers::pi * (k + 0.5 * (j % 2)) / count);
      if (!near_fan(z)) nodes.push_back(z);
    }
  }

  // Fans that meet (r_max = 1 on a two-ended sphere) share boundary nodes.
  std::vector<Complex> unique;
  for (Complex z : nodes) {
    const bool dup = std::any_of(unique.begin(), unique.end(),
                                 [&](Complex u) { return std::abs(u - z) <= 1e-12 * (1.0 + std::abs(z)); });
    if (!dup) unique.push_back(z);
  }

  std::vector<Face> tris = detail::delaunay(unique);
  std::vector<Face> kept;
  for (const Face& t : tris) {
    const Complex a = unique[t[0]], b = unique[t[1]], c = unique[t[2]];
    const Complex centroid = (a + b + c) / 3.0;
    bool hole = false;
    for (Complex p : finite) {
      if (std::abs(centroid - p) < r_min) hole = true;
    }
    if (hole) continue;
    const double longest = std::max({std::norm(b - a), std::norm(c - b), std::norm(a - c)});
    const double area2 = std::abs(((b - a) * std::conj(c - a)).imag());
    if (area2 <= 1e-12 * longest) continue;
    kept.push_back(t);
  }

  // Drop nodes no face uses and renumber.
  std::vector<int> remap(unique.size(), -1);
  for (const Face& t : kept) {
    for (int v : t) remap[v] = 0;
  }
  for (size_t i = 0; i < unique.size(); ++i) {
    if (remap[i] == 0) {
      remap[i] = static_cast<int>(out.nodes.size());
      out.nodes.push_back(unique[i]);
    }
  }
  for (Face t : kept) {
    for (int& v : t) v = remap[v];
    out.triangles.push_back(t);
  }
  return out;
}

SurfaceMesh build_mesh(const WeierstrassData& w, const ParamTriangulation& tri, unsigned threads) {
  SurfaceMesh mesh;
  mesh.param = tri.nodes;
  mesh.faces = tri.triangles;
  mesh.vertices.resize(tri.nodes.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<size_t>(1, tri.nodes.size()));

  std::vector<std::exception_ptr> errors(tri.nodes.size());
  auto work = [&](unsigned id) {
    Immersion f(w);
    for (size_t i = id; i < tri.nodes.size(); i += threads) {
      try {
        mesh.vertices[i] = f(tri.nodes[i]);
      } catch (const NearSingularity& e) {
        std::ostringstream os;
        os << e.what() << " (mesh node " << i << " at " << tri.nodes[i] << ")";
        errors[i] = std::make_exception_ptr(NearSingularity(os.str()));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (std::thread& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return mesh;
}

Projection default_projection(const SurfaceMesh& mesh) {
  if (mesh.vertices.empty()) return {0, 1, 2};
  const size_t n = mesh.vertices.front().size();
  std::vector<double> mean(n, 0.0), var(n, 0.0);
  for (const auto& v : mesh.vertices) {
    for (size_t d = 0; d < n; ++d) mean[d] += v[d];
  }
  for (double& m : mean) m /= static_cast<double>(mesh.vertices.size());
  for (const auto& v : mesh.vertices) {
    for (size_t d = 0; d < n; ++d) var[d] += (v[d] - mean[d]) * (v[d] - mean[d]);
  }
  std::vector<int> axes(n);
  for (size_t d = 0; d < n; ++d) axes[d] = static_cast<int>(d);
  std::stable_sort(axes.begin(), axes.end(), [&](int a, int b) { return var[a] > var[b]; });
  Projection p{axes[0], axes[1], axes[2]};
  std::sort(p.begin(), p.end());
  return p;
}

std::string sidecar_path(const std::string& obj_path) { return obj_path + ".coords.tsv"; }

void export_obj(const SurfaceMesh& mesh, const std::string& path, std::optional<Projection> projection) {
  const int n = mesh.vertices.empty() ? 3 : static_cast<int>(mesh.vertices.front().size());
  const Projection axes = projection.value_or(n > 3 ? default_projection(mesh) : Projection{0, 1, 2});
  for (int a : axes) {
    if (a < 0 || a >= n) throw DegenerateInput("projection axis " + std::to_string(a + 1) + " out of range");
  }
  if (axes[0] == axes[1] || axes[1] == axes[2] || axes[0] == axes[2]) {
    throw DegenerateInput("projection axes must be distinct");
  }

  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << std::setprecision(17);
  for (const auto& v : mesh.vertices) out << "v " << v[axes[0]] << ' ' << v[axes[1]] << ' ' << v[axes[2]] << '\n';
  for (const Face& f : mesh.faces) out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
  if (!out) throw IoError("write failed for " + path);

  if (n > 3) {
    std::ofstream side(sidecar_path(path));
    if (!side) throw IoError("cannot write " + sidecar_path(path));
    side << std::setprecision(17);
    for (int d = 0; d < n; ++d) side << (d ? "\t" : "") << 'x' << d + 1;
    side << '\n';
    for (const auto& v : mesh.vertices) {
      for (int d = 0; d < n; ++d) side << (d ? "\t" : "") << v[d];
      side << '\n';
    }
    if (!side) throw IoError("write failed for " + sidecar_path(path));
  }
}

ObjData parse_obj(std::string_view text) {
  ObjData out;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t end = std::min(text.find('\n', pos), text.size());
    const std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    std::istringstream is(line);
    std::string tag;
    if (!(is >> tag) || tag[0] == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (tag == "v") {
      std::array<double, 3> v{};
      if (!(is >> v[0] >> v[1] >> v[2])) throw ParseError("bad vertex record", line_no, 1);
      out.vertices.push_back(v);
    } else if (tag == "f") {
      std::vector<int> idx;
      std::string token;
      while (is >> token) {
        try {
          int k = std::stoi(token.substr(0, token.find('/')));
          if (k < 0) k += static_cast<int>(out.vertices.size()) + 1;
          idx.push_back(k - 1);
        } catch (const std::exception&) {
          throw ParseError("bad face index '" + token + "'", line_no, static_cast<int>(line.find(token)) + 1);
        }
      }
      if (idx.size() < 3) throw ParseError("face with fewer than 3 vertices", line_no, 1);
      for (size_t i = 1; i + 1 < idx.size(); ++i) out.faces.push_back({idx[0], idx[i], idx[i + 1]});
    }
    if (end == text.size()) break;
  }
  for (const Face& f : out.faces) {
    for (int v : f) {
      if (v < 0 || v >= static_cast<int>(out.vertices.size())) throw ParseError("face index out of range", 0, 0);
    }
  }
  return out;
}

}  // namespace minsurf
