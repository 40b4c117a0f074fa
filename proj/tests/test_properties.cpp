#include <gtest/gtest.h>

#include "minsurf/ends.hpp"
#include "support/properties.hpp"

using namespace minsurf;

TEST(Property, ResidueSumZero) {
  std::mt19937_64 rng(20260101);
  for (int i = 0; i < 100; ++i) EXPECT_LT(props::residue_sum_defect(rng), 1e-8) << "sample " << i;
}

TEST(Property, Conformality) {
  std::mt19937_64 rng(7);
  for (const auto& c : full_catalog()) {
    const Immersion f(c.data);
    for (int i = 0; i < 100; ++i) {
      const Complex z = props::random_regular_point(c.data, rng);
      ASSERT_LT(props::conformality_defect(c.data, f, z), 1e-4) << c.name << " at " << z;
    }
  }
}

TEST(Property, Harmonicity) {
  // The 5-point Laplacian of each coordinate is O(h^2).
  std::mt19937_64 rng(13);
  for (const auto& c : full_catalog()) {
    const Immersion f(c.data);
    for (int i = 0; i < 10; ++i) {
      const Complex z = props::random_regular_point(c.data, rng);
      const auto f0 = f(z);
      auto laplacian = [&](double h) {
        std::vector<double> sum(f0.size(), 0.0);
        for (Complex d : {Complex(h), Complex(-h), Complex(0, h), Complex(0, -h)}) {
          const auto v = f.along_segment(z, f0, z + d);
          for (size_t j = 0; j < sum.size(); ++j) sum[j] += v[j] - f0[j];
        }
        double worst = 0;
        for (double x : sum) worst = std::max(worst, std::abs(x) / (h * h));
        return worst;
      };
      const double coarse = laplacian(0.02), fine = laplacian(0.01);
      if (coarse < 1e-7) continue;
      EXPECT_LT(fine, 0.3 * coarse) << c.name << " at " << z;
    }
  }
}

TEST(Property, PathIndependence) {
  std::mt19937_64 rng(11);
  for (const auto& c : full_catalog()) {
    const Immersion f(c.data);
    for (int i = 0; i < 10; ++i) {
      const Complex z = props::random_regular_point(c.data, rng);
      EXPECT_LT(props::path_dependence(c.data, f, z, rng), 1e-8) << c.name << " at " << z;
    }
  }
}

TEST(Property, MobiusInvariantDegree) {
  std::mt19937_64 rng(3);
  const auto cat = full_catalog();
  for (int i = 0; i < 20; ++i) {
    const CatalogEntry& c = cat[i % cat.size()];
    const WeierstrassData w = reparametrize(c.data, props::random_mobius(rng));
    EXPECT_EQ(gauss_map(w).degree, c.expected.d) << c.name << " sample " << i;
    EXPECT_EQ(w.punctures().size(), c.data.punctures().size()) << c.name;
  }
}

TEST(Property, MainTheoremEquivalence) {
  for (const auto& c : full_catalog()) {
    const CurvatureReport r = curvature_report(c.data, false);
    bool all_regular = true, all_embedded = true;
    for (const auto& e : analyze_ends(c.data)) {
      all_regular = all_regular && e.classification != EndType::HigherOrder;
      all_embedded = all_embedded && e.embedded;
    }
    EXPECT_EQ(r.co_equality, all_regular) << c.name;
    EXPECT_EQ(all_regular, all_embedded) << c.name;
  }
}

TEST(Property, MobiusKeepsMainTheoremVerdict) {
  std::mt19937_64 rng(5);
  for (const auto& c : {catenoid(), holomorphic_counterexample(), generalized_jorge_meeks(2)}) {
    const WeierstrassData w = reparametrize(c.data, props::random_mobius(rng));
    EXPECT_TRUE(validate(w).ok()) << c.name;
    EXPECT_EQ(curvature_report(w, false).co_equality, c.expected.co_equality) << c.name;
  }
}
