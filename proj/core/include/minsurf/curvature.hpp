#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minsurf/weierstrass.hpp"

namespace minsurf {

// An exact integer multiple of pi. Curvature totals and the right-hand
// sides of the Chern-Osserman, Gackstatter and Ejiri inequalities are all
// of this form, so equality is decided on the integers.
struct PiMultiple {
  long long k = 0;
  double value() const;
  std::string symbolic() const;  // "-8π", "0", "π", "-π"
  friend auto operator<=>(const PiMultiple&, const PiMultiple&) = default;
};

// Projective Gauss map [psi_1 : ... : psi_n] with the common denominator
// cleared and common zeros (branch points) divided out.
struct GaussMap {
  std::vector<ComplexPoly> psi;
  int degree = 0;
  std::vector<Root> branch_points;
};

GaussMap gauss_map(const WeierstrassData& w);

// -2 pi d
double total_curvature_algebraic(const GaussMap& g);
PiMultiple total_curvature_pi(const GaussMap& g);

struct NumericCurvature {
  double value = 0.0;
  double previous = 0.0;
  int iterations = 0;
  double inner_radius = 0.0;
  double outer_radius = 0.0;
};

// Integral of K dA from the Green identity: -1/2 times the flux of
// grad log lambda^2 through the boundary of {|z| < R} minus disks of radius
// eps around the finite punctures and branch points. eps shrinks and R grows
// until successive totals agree to tol*max(1, |TC|). Throws
// ConvergenceFailure otherwise.
NumericCurvature total_curvature_numeric(const WeierstrassData& w, double tol = 1e-6);

struct Fullness {
  bool full = false;
  int l = 0;
  int real_rank = 0;
  int complex_rank = 0;
};

// full: no real v != 0 with sum v_j phi_j == 0. l = n - rank_C(psi).
Fullness fullness_and_degeneracy(const WeierstrassData& w);

struct CurvatureReport {
  int d = 0;
  PiMultiple tc_algebraic;
  std::optional<double> tc_numeric;
  int genus = 0;
  int m = 0;
  int chi = 0;

  PiMultiple co_rhs;
  bool co_holds = false;
  bool co_equality = false;
  // Every end has metric order -2; must agree with co_equality.
  bool all_orders_minus_two = false;
  bool co_cross_check = false;

  bool full = false;
  int l = 0;
  PiMultiple gackstatter_rhs;
  bool gackstatter_applicable = false;  // stated for full immersions only
  bool gackstatter_holds = false;
  PiMultiple ejiri_rhs;
  bool ejiri_holds = false;
  bool ejiri_equality = false;
};

// d, TC, m, chi and the Chern-Osserman fields.
CurvatureReport chern_osserman(const WeierstrassData& w);

struct InequalityValues {
  PiMultiple gackstatter_rhs;
  PiMultiple ejiri_rhs;
  bool ejiri_equality = false;
  bool applicable = false;
};

InequalityValues gackstatter_and_ejiri(const WeierstrassData& w, const CurvatureReport& co, const Fullness& fl);

// Everything above in one record; the numeric total is optional because it
// dominates the cost.
CurvatureReport curvature_report(const WeierstrassData& w, bool with_numeric = true, double numeric_tol = 1e-6);

}  // namespace minsurf
