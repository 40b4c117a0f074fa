#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "minsurf/weierstrass.hpp"

namespace minsurf {

enum class EndType { CatenoidType, Planar, HigherOrder };

std::string to_string(EndType t);

struct EndAnalysis {
  SpherePoint puncture;
  int mu = 0;
  int k = 0;
  std::vector<Complex> a_minus2;
  std::vector<double> a_minus1;  // real parts; the residue check covers the rest
  std::vector<Complex> leading;  // a_{-k}
  std::array<std::vector<double>, 3> frame;
  double a = 0.0;
  double b = 0.0;
  EndType classification = EndType::HigherOrder;
  int rotation_index = 0;
  bool embedded = false;
};

// Laurent analysis of the form at one puncture, in the coordinate h = z - p
// (h = 1/z at infinity). Throws ConsistencyError when the bilinear relations
// of an order -2 end fail, InvalidDatum when p is not a complete end.
EndAnalysis analyze_end(const WeierstrassData& w, const SpherePoint& p);
std::vector<EndAnalysis> analyze_ends(const WeierstrassData& w);

// Local chart of an end: h -> z, valid for |h| < radius.
struct EndChart {
  Complex center = 0.0;
  bool at_infinity = false;
  double radius = 0.0;
  Complex to_z(Complex h) const { return at_infinity ? 1.0 / h : center + h; }
};

EndChart end_chart(const WeierstrassData& w, const SpherePoint& p);

// f0(h) = 2 Re(-c2 / h) + 2 c1 log|h| + offset, with the offset matched to
// the immersion by averaging f - f0 over a circle of radius reference.
class AsymptoticModel {
 public:
  AsymptoticModel(EndChart chart, std::vector<Complex> c2, std::vector<double> c1, std::vector<double> offset,
                  double reference);

  const EndChart& chart() const { return chart_; }
  const std::vector<double>& offset() const { return offset_; }
  double reference_radius() const { return reference_; }

  std::vector<double> at_local(Complex h) const;

 private:
  EndChart chart_;
  std::vector<Complex> c2_;
  std::vector<double> c1_;
  std::vector<double> offset_;
  double reference_;
};

// Catenoid or plane piece for an order -2 end. Throws ModelUndefined for
// higher-order ends.
AsymptoticModel asymptotic_model(const WeierstrassData& w, const EndAnalysis& e);

// The order -2 formula applied regardless of the end type. Used as a
// negative control on higher-order ends.
AsymptoticModel forced_model(const WeierstrassData& w, const EndAnalysis& e);

struct AsymptoticCheck {
  std::vector<double> radii;
  std::vector<double> ratios;      // sup |f - f0| / r
  std::vector<double> residuals;   // sup |f - f0|
  std::vector<double> magnitudes;  // sup |f|
  bool bounded = false;
};

// Samples |f - f0| / |h| on circles |h| = r for each radius (decreasing).
// A residual below 1e-9 |f| counts as zero; the verdict looks at the growth
// over the last three radii.
AsymptoticCheck verify_asymptotic(const WeierstrassData& w, const AsymptoticModel& model,
                                  std::span<const double> radii, int samples = 64);

// Normalized intersection of the end with the sphere |f| = R.
struct SphereSection {
  double R = 0.0;
  std::vector<double> theta;
  std::vector<double> r;
  std::vector<std::vector<double>> points;  // f / |f|
};

int rotation_index_numeric(const WeierstrassData& w, const SpherePoint& p, std::span<const double> R_list);
int rotation_index_numeric(const WeierstrassData& w, const EndAnalysis& e, std::span<const double> R_list);

// sup over theta of |f/|f| - c(theta)|, c(theta) = -(e1 cos(k-1)theta + e2 sin(k-1)theta).
double limit_circle_deviation(const WeierstrassData& w, const SpherePoint& p, double R);
std::vector<double> limit_circle_deviations(const WeierstrassData& w, const EndAnalysis& e,
                                            std::span<const double> R_list);

// Strictly decreasing, except that values below floor are all treated as
// zero (and then may repeat).
bool decreasing_to_floor(std::span<const double> values, double floor = 1e-10);

}  // namespace minsurf
