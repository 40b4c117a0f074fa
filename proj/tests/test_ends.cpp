#include <gtest/gtest.h>

#include <cmath>

#include "minsurf/catalog.hpp"
#include "minsurf/ends.hpp"
#include "minsurf/errors.hpp"

using namespace minsurf;

// Reference coefficients from tests/oracles/end_coefficients.py (40-digit
// Cauchy integrals of the closed-form components).

namespace {

const Complex I(0.0, 1.0);
const std::vector<double> kRadii{1e2, 1e3, 1e4};

const EndAnalysis& end_at(const std::vector<EndAnalysis>& ends, const SpherePoint& p) {
  for (const auto& e : ends) {
    if (e.puncture.near(p)) return e;
  }
  throw std::runtime_error("no end at " + p.to_string());
}

void expect_vec(const std::vector<Complex>& got, const std::vector<Complex>& ref, double tol) {
  ASSERT_EQ(got.size(), ref.size());
  for (size_t j = 0; j < ref.size(); ++j) EXPECT_LE(std::abs(got[j] - ref[j]), tol) << "component " << j;
}

void expect_vec(const std::vector<double>& got, const std::vector<double>& ref, double tol) {
  ASSERT_EQ(got.size(), ref.size());
  for (size_t j = 0; j < ref.size(); ++j) EXPECT_NEAR(got[j], ref[j], tol) << "component " << j;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Complex bilinear(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Complex s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

TEST(Ends, CatenoidCoefficients) {
  const auto ends = analyze_ends(catenoid().data);
  const EndAnalysis& e0 = end_at(ends, SpherePoint::at(0.0));
  EXPECT_EQ(e0.mu, -2);
  EXPECT_EQ(e0.k, 2);
  expect_vec(e0.a_minus2, {0.5, 0.5 * I, 0.0}, 1e-13);
  expect_vec(e0.a_minus1, {0.0, 0.0, 1.0}, 1e-13);
  EXPECT_NEAR(e0.a, 0.5, 1e-13);
  EXPECT_NEAR(e0.b, 1.0, 1e-13);
  EXPECT_EQ(e0.classification, EndType::CatenoidType);
  EXPECT_EQ(e0.rotation_index, 1);
  EXPECT_TRUE(e0.embedded);
  expect_vec(e0.frame[0], {1, 0, 0}, 1e-13);
  expect_vec(e0.frame[1], {0, 1, 0}, 1e-13);
  expect_vec(e0.frame[2], {0, 0, 1}, 1e-13);

  const EndAnalysis& einf = end_at(ends, SpherePoint::infinity());
  expect_vec(einf.a_minus2, {0.5, -0.5 * I, 0.0}, 1e-13);
  expect_vec(einf.a_minus1, {0.0, 0.0, -1.0}, 1e-13);
  EXPECT_NEAR(einf.b, 1.0, 1e-13);
}

TEST(Ends, HigherOrderLeadingTerms) {
  const EndAnalysis en = analyze_end(enneper().data, SpherePoint::infinity());
  EXPECT_EQ(en.mu, -4);
  EXPECT_EQ(en.classification, EndType::HigherOrder);
  EXPECT_EQ(en.rotation_index, 3);
  EXPECT_FALSE(en.embedded);
  expect_vec(en.leading, {0.5, -0.5 * I, 0.0}, 1e-13);
  expect_vec(en.a_minus2, {-0.5, -0.5 * I, 0.0}, 1e-13);
  EXPECT_NEAR(en.a, 0.5, 1e-13);

  const auto ends = analyze_ends(holomorphic_counterexample().data);
  const EndAnalysis& c0 = end_at(ends, SpherePoint::at(0.0));
  EXPECT_EQ(c0.mu, -3);
  EXPECT_EQ(c0.rotation_index, 2);
  EXPECT_FALSE(c0.embedded);
  expect_vec(c0.leading, {0.0, 0.0, -1.0, I}, 1e-13);
  EXPECT_NEAR(c0.a, 1.0, 1e-13);
  const EndAnalysis& cinf = end_at(ends, SpherePoint::infinity());
  EXPECT_EQ(cinf.mu, -2);
  EXPECT_EQ(cinf.classification, EndType::Planar);
  expect_vec(cinf.a_minus2, {-0.5, 0.5 * I, 0.0, 0.0}, 1e-13);
  EXPECT_NEAR(cinf.b, 0.0, 1e-13);
}

TEST(Ends, JorgeMeeksAgainstOracle) {
  const double ref_a[] = {0.25, 0.15713484026367723, 0.10825317547305483, 0.08};
  const double ref_b[] = {0.25, 0.24845199749997663, 0.23385358667337134, 0.21908902300206645};
  for (int m = 1; m <= 4; ++m) {
    const auto ends = analyze_ends(generalized_jorge_meeks(m).data);
    ASSERT_EQ(static_cast<int>(ends.size()), m + 1);
    for (const auto& e : ends) {
      EXPECT_EQ(e.mu, -2);
      EXPECT_EQ(e.classification, EndType::CatenoidType);
      EXPECT_NEAR(e.a, ref_a[m - 1], 1e-12) << "m=" << m << " " << e.puncture.to_string();
      EXPECT_NEAR(e.b, ref_b[m - 1], 1e-12) << "m=" << m << " " << e.puncture.to_string();
    }
  }

  const auto ends = analyze_ends(generalized_jorge_meeks(2).data);
  const EndAnalysis& e1 = end_at(ends, SpherePoint::at(1.0));
  expect_vec(e1.a_minus2, {0.0, I / 9.0, 0.0, I / 9.0, 0.15713484026367723}, 1e-12);
  expect_vec(e1.a_minus1, {-2.0 / 9.0, 0.0, -1.0 / 9.0, 0.0, 0.0}, 1e-12);
  const EndAnalysis& ew = end_at(ends, SpherePoint::at(std::polar(1.0, 2 * M_PI / 3)));
  expect_vec(ew.a_minus2,
             {Complex(-1.0 / 12, -0.048112522432468814), Complex(0.048112522432468814, 1.0 / 36),
              Complex(1.0 / 12, 0.048112522432468814), Complex(0.048112522432468814, 1.0 / 36),
              Complex(-0.078567420131838614, 0.13608276348795434)},
             1e-12);
  expect_vec(ew.a_minus1, {1.0 / 9, 0.19245008972987525, 1.0 / 18, -0.096225044864937627, 0.0}, 1e-12);
}

TEST(Ends, FrameAndBilinearRelations) {
  for (const auto& entry : full_catalog()) {
    for (const auto& e : analyze_ends(entry.data)) {
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          EXPECT_NEAR(dot(e.frame[i], e.frame[j]), i == j ? 1.0 : 0.0, 1e-10) << entry.name;
        }
      }
      if (e.mu != -2) continue;
      double norm2 = 0;
      for (Complex c : e.a_minus2) norm2 += std::norm(c);
      std::vector<Complex> am1(e.a_minus1.begin(), e.a_minus1.end());
      EXPECT_LE(std::abs(bilinear(e.a_minus2, e.a_minus2)), 1e-9 * norm2) << entry.name;
      EXPECT_LE(std::abs(bilinear(e.a_minus2, am1)), 1e-9 * norm2) << entry.name;
      // |Re a_{-2}| = |Im a_{-2}| = a and they are orthogonal.
      double re2 = 0, im2 = 0, cross = 0;
      for (Complex c : e.a_minus2) {
        re2 += c.real() * c.real();
        im2 += c.imag() * c.imag();
        cross += c.real() * c.imag();
      }
      EXPECT_NEAR(std::sqrt(re2), e.a, 1e-12);
      EXPECT_NEAR(std::sqrt(im2), e.a, 1e-12);
      EXPECT_NEAR(cross, 0.0, 1e-12);
    }
  }
}

TEST(Ends, ResidueVectorsSumToZero) {
  for (const auto& entry : full_catalog()) {
    const ResidueCheck rc = check_residues_real(entry.data);
    std::vector<Complex> sum(static_cast<size_t>(entry.data.n()), 0.0);
    for (const EndResidues& e : rc.ends) {
      for (size_t j = 0; j < sum.size(); ++j) sum[j] += e.residues[j];
    }
    for (Complex s : sum) EXPECT_LE(std::abs(s), 1e-10) << entry.name;
  }
}

TEST(Ends, TypeInvariants) {
  for (const auto& entry : full_catalog()) {
    for (const auto& e : analyze_ends(entry.data)) {
      EXPECT_EQ(e.k, -e.mu);
      EXPECT_EQ(e.rotation_index, std::abs(e.k - 1));
      EXPECT_EQ(e.embedded, e.rotation_index == 1);
      EXPECT_EQ(e.classification == EndType::HigherOrder, e.mu <= -3);
      if (e.mu == -2) EXPECT_EQ(e.classification == EndType::CatenoidType, e.b > 1e-8 * e.a);
    }
  }
}

TEST(Ends, Errors) {
  EXPECT_THROW(analyze_end(catenoid().data, SpherePoint::at(1.0)), InvalidDatum);
  const EndAnalysis en = analyze_end(enneper().data, SpherePoint::infinity());
  EXPECT_THROW(asymptotic_model(enneper().data, en), ModelUndefined);
  const EndAnalysis cat = analyze_end(catenoid().data, SpherePoint::at(0.0));
  const AsymptoticModel model = asymptotic_model(catenoid().data, cat);
  const std::vector<double> too_big{10.0};
  EXPECT_THROW(verify_asymptotic(catenoid().data, model, too_big), DegenerateInput);
  EXPECT_THROW(rotation_index_numeric(catenoid().data, cat, std::vector<double>{}), DegenerateInput);
}

TEST(Ends, ChartRadius) {
  EXPECT_NEAR(end_chart(catenoid().data, SpherePoint::at(0.0)).radius, 0.5, 1e-15);
  const EndChart inf = end_chart(catenoid().data, SpherePoint::infinity());
  EXPECT_TRUE(inf.at_infinity);
  EXPECT_NEAR(std::abs(inf.to_z(0.25) - 4.0), 0.0, 1e-15);
  const EndChart g = end_chart(generalized_jorge_meeks(2).data, SpherePoint::at(1.0));
  EXPECT_NEAR(g.radius, 0.5, 1e-12);
}

TEST(Asymptotics, CatenoidBoundedPlaneExact) {
  const std::vector<double> radii{1e-1, 1e-2, 1e-3, 1e-4};
  const WeierstrassData& w = catenoid().data;
  for (const auto& e : analyze_ends(w)) {
    const AsymptoticCheck chk = verify_asymptotic(w, asymptotic_model(w, e), radii);
    EXPECT_TRUE(chk.bounded);
    for (double r : chk.ratios) EXPECT_NEAR(r, 1.0, 0.2);
  }
  const WeierstrassData& p = plane().data;
  const EndAnalysis pe = analyze_end(p, SpherePoint::infinity());
  const AsymptoticCheck chk = verify_asymptotic(p, asymptotic_model(p, pe), radii);
  EXPECT_TRUE(chk.bounded);
  for (double r : chk.ratios) EXPECT_LE(r, 1e-6);
}

TEST(Asymptotics, ForcedModelDivergesOnOrderThree) {
  const std::vector<double> radii{1e-1, 1e-2, 1e-3, 1e-4};
  const WeierstrassData& w = holomorphic_counterexample().data;
  const EndAnalysis e = analyze_end(w, SpherePoint::at(0.0));
  const AsymptoticCheck chk = verify_asymptotic(w, forced_model(w, e), radii);
  EXPECT_FALSE(chk.bounded);
  // ~ r^{-2}
  for (size_t i = 1; i < chk.ratios.size(); ++i) EXPECT_GT(chk.ratios[i] / chk.ratios[i - 1], 50.0);
}

TEST(Rotation, NumericMatchesAnalytic) {
  EXPECT_EQ(rotation_index_numeric(catenoid().data, SpherePoint::at(0.0), kRadii), 1);
  EXPECT_EQ(rotation_index_numeric(catenoid().data, SpherePoint::infinity(), kRadii), 1);
  EXPECT_EQ(rotation_index_numeric(holomorphic_counterexample().data, SpherePoint::at(0.0), kRadii), 2);
  EXPECT_EQ(rotation_index_numeric(holomorphic_counterexample().data, SpherePoint::infinity(), kRadii), 1);
  EXPECT_EQ(rotation_index_numeric(enneper().data, SpherePoint::infinity(), kRadii), 3);
}

TEST(Rotation, LimitCircleDeviation) {
  const WeierstrassData& w = catenoid().data;
  const double d2 = limit_circle_deviation(w, SpherePoint::at(0.0), 1e2);
  const double d3 = limit_circle_deviation(w, SpherePoint::at(0.0), 1e3);
  EXPECT_LT(d3, d2);
  EXPECT_LT(d2, 0.2);
  const EndAnalysis pe = analyze_end(plane().data, SpherePoint::infinity());
  for (double d : limit_circle_deviations(plane().data, pe, kRadii)) EXPECT_LE(d, 1e-10);
  const EndAnalysis ce = analyze_end(holomorphic_counterexample().data, SpherePoint::at(0.0));
  EXPECT_TRUE(decreasing_to_floor(limit_circle_deviations(holomorphic_counterexample().data, ce, kRadii)));
}

TEST(Rotation, DecreasingToFloor) {
  EXPECT_TRUE(decreasing_to_floor(std::vector<double>{0.1, 0.01, 0.001}));
  EXPECT_FALSE(decreasing_to_floor(std::vector<double>{0.1, 0.1, 0.001}));
  EXPECT_TRUE(decreasing_to_floor(std::vector<double>{1e-15, 3e-15, 2e-16}));
  EXPECT_FALSE(decreasing_to_floor(std::vector<double>{1e-15, 1e-3}));
}
