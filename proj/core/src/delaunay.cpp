#include "delaunay.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "minsurf/errors.hpp"

namespace minsurf::detail {

namespace {

using Real = long double;

struct P {
  Real x, y;
};

Real orient(const P& a, const P& b, const P& c) { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); }

// > 0 when d is strictly inside the circumcircle of the ccw triangle abc.
Real in_circle(const P& a, const P& b, const P& c, const P& d) {
  const Real adx = a.x - d.x, ady = a.y - d.y;
  const Real bdx = b.x - d.x, bdy = b.y - d.y;
  const Real cdx = c.x - d.x, cdy = c.y - d.y;
  const Real ad = adx * adx + ady * ady;
  const Real bd = bdx * bdx + bdy * bdy;
  const Real cd = cdx * cdx + cdy * cdy;
  return ad * (bdx * cdy - cdx * bdy) - bd * (adx * cdy - cdx * ady) + cd * (adx * bdy - bdx * ady);
}

struct Tri {
  std::array<int, 3> v;
  bool alive = true;
};

}  // namespace

std::vector<std::array<int, 3>> delaunay(std::span<const Complex> pts) {
  const int n = static_cast<int>(pts.size());
  if (n < 3) return {};
  std::vector<P> p;
  p.reserve(n + 3);
  Real xmin = pts[0].real(), xmax = xmin, ymin = pts[0].imag(), ymax = ymin;
  for (Complex z : pts) {
    p.push_back({z.real(), z.imag()});
    xmin = std::min<Real>(xmin, z.real());
    xmax = std::max<Real>(xmax, z.real());
    ymin = std::min<Real>(ymin, z.imag());
    ymax = std::max<Real>(ymax, z.imag());
  }
  const Real span = std::max<Real>({xmax - xmin, ymax - ymin, 1e-300L});
  const Real cx = 0.5L * (xmin + xmax), cy = 0.5L * (ymin + ymax);
  p.push_back({cx - 40 * span, cy - 20 * span});
  p.push_back({cx + 40 * span, cy - 20 * span});
  p.push_back({cx, cy + 40 * span});

  std::vector<Tri> tris{{{n, n + 1, n + 2}}};
  for (int i = 0; i < n; ++i) {
    const P& q = p[i];
    std::vector<int> bad;
    int container = -1;
    for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
      if (!tris[t].alive) continue;
      const auto& v = tris[t].v;
      if (in_circle(p[v[0]], p[v[1]], p[v[2]], q) > 0) bad.push_back(t);
      if (container < 0 && orient(p[v[0]], p[v[1]], q) >= 0 && orient(p[v[1]], p[v[2]], q) >= 0 &&
          orient(p[v[2]], p[v[0]], q) >= 0) {
        container = t;
      }
    }
    if (container < 0) throw ConsistencyError("triangulation lost a point");
    if (std::find(bad.begin(), bad.end(), container) == bad.end()) bad.push_back(container);

    // Shrink the cavity until every boundary edge sees the new point; round-
    // off on co-circular points can otherwise produce a non-star cavity.
    std::vector<std::pair<std::pair<int, int>, int>> boundary;
    for (bool changed = true; changed;) {
      changed = false;
      std::map<std::pair<int, int>, int> count;
      for (int t : bad) {
        const auto& v = tris[t].v;
        for (int e = 0; e < 3; ++e) ++count[std::minmax(v[e], v[(e + 1) % 3])];
      }
      boundary.clear();
      for (int t : bad) {
        const auto& v = tris[t].v;
        for (int e = 0; e < 3; ++e) {
          const int a = v[e], b = v[(e + 1) % 3];
          if (count[std::minmax(a, b)] == 1) boundary.push_back({{a, b}, t});
        }
      }
      for (const auto& [edge, owner] : boundary) {
        if (orient(p[edge.first], p[edge.second], q) <= 0 && owner != container) {
          bad.erase(std::find(bad.begin(), bad.end(), owner));
          changed = true;
          break;
        }
      }
    }
    for (int t : bad) tris[t].alive = false;
    for (const auto& [edge, owner] : boundary) {
      if (orient(p[edge.first], p[edge.second], q) > 0) tris.push_back({{edge.first, edge.second, i}});
    }
    if (tris.size() > 4 * static_cast<size_t>(n) + 64) {
      std::erase_if(tris, [](const Tri& t) { return !t.alive; });
    }
  }

  std::vector<std::array<int, 3>> out;
  for (const Tri& t : tris) {
    if (!t.alive || t.v[0] >= n || t.v[1] >= n || t.v[2] >= n) continue;
    std::array<int, 3> v = t.v;
    std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace minsurf::detail
