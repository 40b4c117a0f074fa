#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "minsurf/catalog.hpp"
#include "minsurf/errors.hpp"
#include "minsurf/mesh.hpp"

using namespace minsurf;
namespace fs = std::filesystem;

namespace {

std::string tmp_path(const std::string& name) {
  fs::create_directories(MINSURF_TEST_TMP);
  return (fs::path(MINSURF_TEST_TMP) / name).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

long euler_characteristic(const ParamTriangulation& t) {
  std::set<std::pair<int, int>> edges;
  for (const Face& f : t.triangles) {
    for (int e = 0; e < 3; ++e) edges.insert(std::minmax(f[e], f[(e + 1) % 3]));
  }
  return static_cast<long>(t.nodes.size()) - static_cast<long>(edges.size()) + static_cast<long>(t.triangles.size());
}

void expect_valid(const ParamTriangulation& t) {
  const int n = static_cast<int>(t.nodes.size());
  std::set<int> used;
  for (const Face& f : t.triangles) {
    for (int v : f) {
      ASSERT_GE(v, 0);
      ASSERT_LT(v, n);
      used.insert(v);
    }
    const Complex a = t.nodes[f[0]], b = t.nodes[f[1]], c = t.nodes[f[2]];
    const double area = 0.5 * std::imag(std::conj(b - a) * (c - a));
    EXPECT_GT(area, 0.0);
  }
  EXPECT_EQ(static_cast<int>(used.size()), n) << "unreferenced nodes";
  std::set<std::pair<double, double>> distinct;
  for (Complex z : t.nodes) distinct.insert({z.real(), z.imag()});
  EXPECT_EQ(static_cast<int>(distinct.size()), n) << "duplicate nodes";
  // every interior edge is shared by exactly two faces with opposite orientation
  std::map<std::pair<int, int>, int> directed;
  for (const Face& f : t.triangles) {
    for (int e = 0; e < 3; ++e) EXPECT_EQ(++directed[std::make_pair(f[e], f[(e + 1) % 3])], 1) << "non-manifold edge";
  }
}

double metric_worst(const WeierstrassData& w, const SurfaceMesh& m, int& count) {
  double worst = 0;
  count = 0;
  for (const Face& f : m.faces) {
    for (int e = 0; e < 3; ++e) {
      const int a = f[e], b = f[(e + 1) % 3];
      const double dp = std::abs(m.param[a] - m.param[b]);
      if (dp >= 0.01) continue;
      const double lam = std::sqrt(conformal_factor(w, 0.5 * (m.param[a] + m.param[b])).lambda_sq);
      double d2 = 0;
      for (size_t k = 0; k < m.vertices[a].size(); ++k) d2 += std::pow(m.vertices[a][k] - m.vertices[b][k], 2);
      worst = std::max(worst, std::abs(std::sqrt(d2) / (lam * dp) - 1.0));
      ++count;
    }
  }
  return worst;
}

}  // namespace

TEST(SampleDomain, CatenoidAnnulus) {
  const ParamTriangulation t = sample_domain(catenoid().data, 1e-2, 1.0, 64);
  expect_valid(t);
  EXPECT_TRUE(t.warnings.empty());
  EXPECT_EQ(euler_characteristic(t), 0);
  int near0 = 0, far = 0;
  for (Complex z : t.nodes) {
    EXPECT_GE(std::abs(z), 1e-2 * (1 - 1e-12));
    EXPECT_LE(std::abs(z), 1e2 * (1 + 1e-12));
    if (std::abs(std::abs(z) - 1e-2) < 1e-12) ++near0;
    if (std::abs(std::abs(z) - 1e2) < 1e-9) ++far;
  }
  EXPECT_EQ(near0, 64);
  EXPECT_EQ(far, 64);
}

TEST(SampleDomain, JorgeMeeksThreeHoles) {
  const WeierstrassData& w = generalized_jorge_meeks(2).data;
  const ParamTriangulation t = sample_domain(w, 1e-2, 1.0, 64);
  expect_valid(t);
  // r_max shrinks because the cube roots of unity are sqrt(3) apart
  EXPECT_FALSE(t.warnings.empty());
  EXPECT_LT(t.r_max, std::sqrt(3.0) / 2);
  // disk with three holes
  EXPECT_EQ(euler_characteristic(t), -2);
  for (Complex z : t.nodes) {
    for (Complex p : w.finite_punctures()) EXPECT_GE(std::abs(z - p), 1e-2 * (1 - 1e-12));
  }
}

TEST(SampleDomain, MinimalResolution) {
  const ParamTriangulation t = sample_domain(catenoid().data, 1e-2, 1.0, 8);
  expect_valid(t);
  EXPECT_EQ(euler_characteristic(t), 0);
  EXPECT_THROW(sample_domain(catenoid().data, 1e-2, 1.0, 7), DegenerateInput);
  EXPECT_THROW(sample_domain(catenoid().data, 1.0, 1e-2, 16), DegenerateInput);
}

TEST(BuildMesh, PlaneIsFlat) {
  const WeierstrassData& w = plane().data;
  const SurfaceMesh m = build_mesh(w, sample_domain(w, 1e-2, 1.0, 16));
  for (const auto& v : m.vertices) EXPECT_EQ(v[2], 0.0);
  EXPECT_EQ(euler_characteristic(sample_domain(w, 1e-2, 1.0, 16)), 1);
}

TEST(BuildMesh, CatenoidRadiiGrowTowardEnds) {
  const WeierstrassData& w = catenoid().data;
  const SurfaceMesh m = build_mesh(w, sample_domain(w, 1e-2, 1.0, 32));
  for (size_t i = 0; i < m.param.size(); ++i) {
    const double r = std::abs(m.param[i]);
    if (std::abs(r - 1e-2) > 1e-12) continue;
    double f2 = 0;
    for (double x : m.vertices[i]) f2 += x * x;
    // |f| ~ 2a / r with a = 1/2
    EXPECT_NEAR(std::sqrt(f2) * r, 1.0, 0.05);
  }
}

TEST(BuildMesh, MetricConsistency) {
  for (const auto& c : {catenoid(), generalized_jorge_meeks(2), holomorphic_counterexample()}) {
    const SurfaceMesh m = build_mesh(c.data, sample_domain(c.data, 1e-2, 1.0, 64));
    int count = 0;
    EXPECT_LT(metric_worst(c.data, m, count), 0.10) << c.name;
    EXPECT_GT(count, 100) << c.name;
  }
}

TEST(BuildMesh, DeterministicAcrossThreadCounts) {
  const WeierstrassData& w = generalized_jorge_meeks(2).data;
  const ParamTriangulation t = sample_domain(w, 1e-2, 1.0, 16);
  const SurfaceMesh a = build_mesh(w, t, 1);
  const SurfaceMesh b = build_mesh(w, t, 3);
  EXPECT_EQ(a.vertices, b.vertices);
  EXPECT_EQ(a.faces, b.faces);
  EXPECT_EQ(a.param, b.param);
}

TEST(BuildMesh, CounterexampleHasFourColumns) {
  const WeierstrassData& w = holomorphic_counterexample().data;
  const SurfaceMesh m = build_mesh(w, sample_domain(w, 1e-2, 1.0, 16));
  for (const auto& v : m.vertices) ASSERT_EQ(v.size(), 4u);
}

TEST(Obj, SingleTriangle) {
  SurfaceMesh m;
  m.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
  m.faces = {{0, 1, 2}};
  m.param = {0.0, 1.0, Complex(0, 1)};
  const std::string path = tmp_path("tri.obj");
  export_obj(m, path);
  std::istringstream in(slurp(path));
  std::string line;
  int v = 0, f = 0;
  while (std::getline(in, line)) {
    if (line.rfind("v ", 0) == 0) ++v;
    if (line.rfind("f ", 0) == 0) {
      ++f;
      EXPECT_EQ(line, "f 1 2 3");
    }
  }
  EXPECT_EQ(v, 3);
  EXPECT_EQ(f, 1);
  EXPECT_FALSE(fs::exists(sidecar_path(path)));
}

TEST(Obj, RoundTrip) {
  const WeierstrassData& w = catenoid().data;
  const SurfaceMesh m = build_mesh(w, sample_domain(w, 1e-2, 1.0, 16));
  const std::string path = tmp_path("cat.obj");
  export_obj(m, path);
  const ObjData back = parse_obj(slurp(path));
  ASSERT_EQ(back.vertices.size(), m.vertices.size());
  ASSERT_EQ(back.faces, m.faces);
  for (size_t i = 0; i < m.vertices.size(); ++i) {
    for (int k = 0; k < 3; ++k) EXPECT_EQ(back.vertices[i][k], m.vertices[i][k]);
  }
}

TEST(Obj, ProjectionAndSidecar) {
  const WeierstrassData& w = holomorphic_counterexample().data;
  const SurfaceMesh m = build_mesh(w, sample_domain(w, 1e-2, 1.0, 16));
  const std::string path = tmp_path("ce.obj");
  export_obj(m, path, Projection{0, 1, 2});
  const ObjData back = parse_obj(slurp(path));
  ASSERT_EQ(back.vertices.size(), m.vertices.size());
  for (size_t i = 0; i < m.vertices.size(); ++i) {
    for (int k = 0; k < 3; ++k) EXPECT_EQ(back.vertices[i][k], m.vertices[i][k]);
  }
  ASSERT_TRUE(fs::exists(sidecar_path(path)));
  std::istringstream side(slurp(sidecar_path(path)));
  std::string line;
  std::getline(side, line);
  EXPECT_EQ(line, "x1\tx2\tx3\tx4");
  size_t rows = 0;
  while (std::getline(side, line)) {
    std::istringstream row(line);
    std::vector<double> vals;
    double x;
    while (row >> x) vals.push_back(x);
    ASSERT_EQ(vals.size(), 4u) << line;
    ASSERT_LT(rows, m.vertices.size());
    EXPECT_EQ(vals[3], m.vertices[rows][3]);
    ++rows;
  }
  EXPECT_EQ(rows, m.vertices.size());
  EXPECT_THROW(export_obj(m, path, Projection{0, 0, 1}), DegenerateInput);
  EXPECT_THROW(export_obj(m, path, Projection{0, 1, 4}), DegenerateInput);
  EXPECT_THROW(export_obj(m, "/nonexistent/dir/x.obj"), IoError);
}

TEST(Obj, ParseVariants) {
  const ObjData d = parse_obj("# c\nv 0 0 0\nv 1 0 0\nv 0 1 0\nvn 0 0 1\nf 1/1/1 2//1 -1\n");
  ASSERT_EQ(d.faces.size(), 1u);
  EXPECT_EQ(d.faces[0], (Face{0, 1, 2}));
  EXPECT_THROW(parse_obj("v 0 0\n"), ParseError);
  EXPECT_THROW(parse_obj("v 0 0 0\nf 1 2 3\n"), ParseError);
  EXPECT_THROW(parse_obj("v 0 0 0\nf 1 x 3\n"), ParseError);
}
