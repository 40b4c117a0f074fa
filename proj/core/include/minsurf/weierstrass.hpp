#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "minsurf/rational.hpp"

namespace minsurf {

// Weierstrass datum of a genus-zero minimal immersion f: the components
// phi_j with df_j/dz = phi_j, the ends (punctures of the sphere) and the
// basepoint of the period integral f = 2 Re int_{z0}^{z} phi dz.
//
// Construction checks structure only (arity, puncture bookkeeping,
// basepoint placement). Conformality, real periods and completeness are
// separate checks so that rejected data can still be inspected.
class WeierstrassData {
 public:
  WeierstrassData(std::string label, std::vector<RationalMap> phi,
                  std::optional<std::vector<SpherePoint>> punctures = std::nullopt,
                  std::optional<Complex> basepoint = std::nullopt, const Tolerances& tol = {});

  int n() const { return static_cast<int>(phi_.size()); }
  const std::string& label() const { return label_; }
  std::span<const RationalMap> phi() const { return phi_; }
  std::span<const SpherePoint> punctures() const { return punctures_; }
  std::vector<Complex> finite_punctures() const;
  bool has_end_at_infinity() const;
  Complex basepoint() const { return basepoint_; }
  const Tolerances& tolerances() const { return tol_; }

  // phi(z), one value per component.
  std::vector<Complex> eval(Complex z) const;
  void eval(Complex z, std::span<Complex> out) const;

 private:
  std::string label_;
  std::vector<RationalMap> phi_;
  std::vector<SpherePoint> punctures_;
  Complex basepoint_;
  Tolerances tol_;
};

struct NullCheck {
  bool ok = false;
  // max |coefficient of sum phi_j^2 D^2| relative to the size of the terms.
  double defect = 0.0;
  // Relative magnitudes of the coefficients above tolerance.
  std::vector<double> offending;
};

// Sum_j phi_j^2 == 0 as a rational identity, over the common denominator.
NullCheck validate_null(const WeierstrassData& w);

// Poles of the forms phi_j dz over the sphere, infinity last when present.
std::vector<SpherePoint> detect_punctures(std::span<const RationalMap> phi, const Tolerances& tol = {});

struct EndResidues {
  SpherePoint point;
  std::vector<Complex> residues;
};

struct ResidueCheck {
  bool ok = false;
  double worst_imag = 0.0;
  std::vector<EndResidues> ends;
};

ResidueCheck check_residues_real(const WeierstrassData& w);

struct MetricOrder {
  int mu = 0;
  bool is_end = false;
};

// Order of the 1-form phi dz at p (minimum over components).
MetricOrder metric_order_at(const WeierstrassData& w, const SpherePoint& p);

struct Validation {
  NullCheck null;
  ResidueCheck residues;
  std::vector<MetricOrder> orders;  // parallel to punctures()
  bool complete = false;            // every end has mu <= -2
  bool ok() const { return null.ok && residues.ok && complete; }
};

Validation validate(const WeierstrassData& w);

struct MetricSample {
  Complex z;
  double lambda_sq = 0.0;
};

// ds^2 = lambda^2 |dz|^2 with lambda^2 = 2 sum |phi_j|^2.
MetricSample conformal_factor(const WeierstrassData& w, Complex z);

// Common denominator D (monic lcm of the reduced denominators) and the
// cleared numerators A_j = phi_j * D.
struct ClearedForm {
  ComplexPoly denominator;
  std::vector<ComplexPoly> numerators;
};

ClearedForm clear_denominators(std::span<const RationalMap> phi, const Tolerances& tol = {});

// z = (a t + b) / (c t + d), ad - bc != 0.
struct Mobius {
  Complex a = 1.0, b = 0.0, c = 0.0, d = 1.0;
  Complex operator()(Complex t) const { return (a * t + b) / (c * t + d); }
  Complex determinant() const { return a * d - b * c; }
};

// Pulls the datum back along z = M(t): phi~(t) = phi(M(t)) M'(t).
WeierstrassData reparametrize(const WeierstrassData& w, const Mobius& m);

// Pulls a single rational map back along M, including the Jacobian M'(t).
RationalMap pull_back_form(const RationalMap& r, const Mobius& m, const Tolerances& tol = {});

// Evaluates f(z) = 2 Re int_{z0}^{z} phi dz by adaptive quadrature along a
// polygonal route that keeps clear of the punctures. Holds a reference to
// the datum, which must outlive it.
class Immersion {
 public:
  explicit Immersion(const WeierstrassData& w);

  const WeierstrassData& datum() const { return *w_; }

  std::vector<double> operator()(Complex z) const;
  // f(to) given f(from), integrating along a routed path.
  std::vector<double> continue_to(Complex from, std::span<const double> f_from, Complex to) const;
  // f(to) given f(from), integrating along the straight segment only.
  std::vector<double> along_segment(Complex from, std::span<const double> f_from, Complex to) const;
  // 2 Re of the integral along the given polyline (no rerouting).
  std::vector<double> along_polyline(std::span<const Complex> vertices) const;

  // Waypoints from a to b (inclusive) keeping clear of the punctures.
  std::vector<Complex> route(Complex a, Complex b) const;

  // Throws NearSingularity if z is numerically on a puncture.
  void check_regular(Complex z) const;

 private:
  std::vector<Complex> integrate_segment(Complex a, Complex b) const;

  const WeierstrassData* w_;
  std::vector<Complex> finite_;
  std::vector<double> clearance_;
  bool end_at_infinity_ = false;
  double singular_radius_ = 0.0;
};

// Single evaluation convenience wrapper.
std::vector<double> immersion_eval(const WeierstrassData& w, Complex z);

}  // namespace minsurf
