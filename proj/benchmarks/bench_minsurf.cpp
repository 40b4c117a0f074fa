#include <benchmark/benchmark.h>

#include <random>

#include "minsurf/catalog.hpp"
#include "minsurf/complex_poly.hpp"
#include "minsurf/curvature.hpp"
#include "minsurf/ends.hpp"
#include "minsurf/mesh.hpp"

using namespace minsurf;

static void BM_Roots(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  std::vector<Complex> c(static_cast<size_t>(state.range(0)) + 1);
  for (auto& x : c) x = {g(rng), g(rng)};
  const ComplexPoly p(c);
  for (auto _ : state) benchmark::DoNotOptimize(roots(p));
}
BENCHMARK(BM_Roots)->Arg(8)->Arg(32)->Arg(128);

static void BM_RootsClustered(benchmark::State& state) {
  const ComplexPoly c{-1.0, 0.0, 0.0, 0.0, 0.0, 1.0};
  const ComplexPoly p = c * c;
  for (auto _ : state) benchmark::DoNotOptimize(roots(p));
}
BENCHMARK(BM_RootsClustered);

static void BM_ImmersionEval(benchmark::State& state) {
  const CatalogEntry e = generalized_jorge_meeks(static_cast<int>(state.range(0)));
  const Immersion f(e.data);
  for (auto _ : state) benchmark::DoNotOptimize(f(Complex(-0.7, 1.3)));
}
BENCHMARK(BM_ImmersionEval)->Arg(1)->Arg(4);

static void BM_TotalCurvatureNumeric(benchmark::State& state) {
  const CatalogEntry e = generalized_jorge_meeks(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(total_curvature_numeric(e.data, 1e-6));
}
BENCHMARK(BM_TotalCurvatureNumeric)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_RotationIndex(benchmark::State& state) {
  const CatalogEntry e = holomorphic_counterexample();
  const EndAnalysis end = analyze_end(e.data, SpherePoint::at(0.0));
  const std::vector<double> radii{1e2, 1e3, 1e4};
  for (auto _ : state) benchmark::DoNotOptimize(rotation_index_numeric(e.data, end, radii));
}
BENCHMARK(BM_RotationIndex)->Unit(benchmark::kMillisecond);

static void BM_Mesh(benchmark::State& state) {
  const CatalogEntry e = catenoid();
  const int res = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const ParamTriangulation t = sample_domain(e.data, 1e-2, 1.0, res);
    benchmark::DoNotOptimize(build_mesh(e.data, t));
  }
}
BENCHMARK(BM_Mesh)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
