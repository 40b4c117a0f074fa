#include "minsurf/curvature.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "minsurf/errors.hpp"

namespace minsurf {

namespace {

// Flux of r d/dr log lambda^2 around the circle |z - c| = r, i.e.
// int_0^{2pi} 2 Re[sum conj(phi) phi' (z - c)] / sum |phi|^2 dtheta.
double circle_flux(const WeierstrassData& w, Complex center, double radius) {
  auto sample = [&](double theta) {
    const Complex h = std::polar(radius, theta);
    const Complex z = center + h;
    double norm2 = 0.0;
    Complex mixed = 0.0;
    for (const RationalMap& r : w.phi()) {
      if (r.is_zero()) continue;
      const Complex v = r(z);
      norm2 += std::norm(v);
      mixed += std::conj(v) * r.derivative_at(z) * h;
    }
    return 2.0 * mixed.real() / norm2;
  };
  // Periodic trapezoid rule, doubled until stable.
  int n = 128;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += sample(2.0 * std::numbers::pi * i / n);
  double estimate = 2.0 * std::numbers::pi * sum / n;
  while (n < (1 << 18)) {
    double extra = 0.0;
    for (int i = 0; i < n; ++i) extra += sample(2.0 * std::numbers::pi * (i + 0.5) / n);
    sum += extra;
    n *= 2;
    const double next = 2.0 * std::numbers::pi * sum / n;
    const bool done = std::abs(next - estimate) <= 1e-12 * std::max(1.0, std::abs(next));
    estimate = next;
    if (done) break;
  }
  return estimate;
}

int numeric_rank(const Eigen::MatrixXd& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int rank = 0;
  for (int i = 0; i < s.size(); ++i) {
    if (s(i) > rel_tol * s(0)) ++rank;
  }
  return rank;
}

int numeric_rank(const Eigen::MatrixXcd& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int rank = 0;
  for (int i = 0; i < s.size(); ++i) {
    if (s(i) > rel_tol * s(0)) ++rank;
  }
  return rank;
}

}  // namespace

double PiMultiple::value() const { return static_cast<double>(k) * std::numbers::pi; }

std::string PiMultiple::symbolic() const {
  if (k == 0) return "0";
  if (k == 1) return "π";
  if (k == -1) return "-π";
  return std::to_string(k) + "π";
}

GaussMap gauss_map(const WeierstrassData& w) {
  const ClearedForm cf = clear_denominators(w.phi(), w.tolerances());
  ComplexPoly common;
  bool any = false;
  for (const ComplexPoly& a : cf.numerators) {
    if (a.is_zero()) continue;
    common = any ? poly_gcd(common, a, w.tolerances()) : a.monic();
    any = true;
  }
  if (!any) throw DegenerateInput("Gauss map of the zero datum");

  GaussMap g;
  for (const ComplexPoly& a : cf.numerators) {
    g.psi.push_back(a.is_zero() ? a : divmod(a, common).quotient);
    g.degree = std::max(g.degree, g.psi.back().degree());
  }
  if (common.degree() >= 1) g.branch_points = roots(common, w.tolerances());
  return g;
}

double total_curvature_algebraic(const GaussMap& g) { return -2.0 * std::numbers::pi * g.degree; }

PiMultiple total_curvature_pi(const GaussMap& g) { return {-2LL * g.degree}; }

NumericCurvature total_curvature_numeric(const WeierstrassData& w, double tol) {
  std::vector<Complex> centers = w.finite_punctures();
  for (const Root& b : gauss_map(w).branch_points) centers.push_back(b.value);

  double sep = 1.0;
  double reach = 1.0;
  for (size_t i = 0; i < centers.size(); ++i) {
    reach = std::max(reach, std::abs(centers[i]));
    for (size_t j = i + 1; j < centers.size(); ++j) sep = std::min(sep, std::abs(centers[i] - centers[j]));
  }

  NumericCurvature out;
  double eps = 0.25 * sep;
  double outer = 4.0 * reach;
  double previous = 0.0;
  for (int k = 0; k < 14; ++k) {
    double flux = circle_flux(w, 0.0, outer);
    for (Complex c : centers) flux -= circle_flux(w, c, eps);
    const double tc = -0.5 * flux;
    out.previous = previous;
    out.value = tc;
    out.iterations = k + 1;
    out.inner_radius = eps;
    out.outer_radius = outer;
    if (k > 0 && std::abs(tc - previous) <= tol * std::max(1.0, std::abs(tc))) return out;
    previous = tc;
    eps *= 0.25;
    outer *= 4.0;
  }
  throw ConvergenceFailure("total curvature quadrature did not stabilize", out.previous, out.value);
}

Fullness fullness_and_degeneracy(const WeierstrassData& w) {
  const GaussMap g = gauss_map(w);
  const int n = w.n();
  const int cols = g.degree + 1;
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, cols);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k <= g.psi[j].degree(); ++k) c(j, k) = g.psi[j][k];
  }
  Eigen::MatrixXd stacked(n, 2 * cols);
  stacked << c.real(), c.imag();

  Fullness out;
  const double tol = w.tolerances().rank();
  out.real_rank = numeric_rank(stacked, tol);
  out.complex_rank = numeric_rank(c, tol);
  out.full = out.real_rank == n;
  out.l = n - out.complex_rank;
  return out;
}

CurvatureReport chern_osserman(const WeierstrassData& w) {
  const GaussMap g = gauss_map(w);
  CurvatureReport r;
  r.d = g.degree;
  r.tc_algebraic = total_curvature_pi(g);
  r.genus = 0;
  r.m = static_cast<int>(w.punctures().size());
  r.chi = 2 - 2 * r.genus - r.m;
  r.co_rhs = {2LL * (r.chi - r.m)};
  r.co_holds = r.tc_algebraic <= r.co_rhs;
  r.co_equality = r.tc_algebraic == r.co_rhs;
  r.all_orders_minus_two = std::all_of(w.punctures().begin(), w.punctures().end(),
                                       [&](const SpherePoint& p) { return metric_order_at(w, p).mu == -2; });
  r.co_cross_check = r.co_equality == r.all_orders_minus_two;
  return r;
}

InequalityValues gackstatter_and_ejiri(const WeierstrassData& w, const CurvatureReport& co, const Fullness& fl) {
  InequalityValues v;
  v.gackstatter_rhs = {2LL * co.chi + co.m - 1 - w.n()};
  v.ejiri_rhs = {static_cast<long long>(co.chi) + co.m - 2LL * w.n() + 2LL * fl.l};
  v.ejiri_equality = co.tc_algebraic == v.ejiri_rhs;
  v.applicable = fl.full;
  return v;
}

CurvatureReport curvature_report(const WeierstrassData& w, bool with_numeric, double numeric_tol) {
  CurvatureReport r = chern_osserman(w);
  const Fullness fl = fullness_and_degeneracy(w);
  const InequalityValues iv = gackstatter_and_ejiri(w, r, fl);
  r.full = fl.full;
  r.l = fl.l;
  r.gackstatter_rhs = iv.gackstatter_rhs;
  r.gackstatter_applicable = iv.applicable;
  r.gackstatter_holds = r.tc_algebraic <= iv.gackstatter_rhs;
  r.ejiri_rhs = iv.ejiri_rhs;
  r.ejiri_holds = r.tc_algebraic <= iv.ejiri_rhs;
  r.ejiri_equality = iv.ejiri_equality;
  if (with_numeric) r.tc_numeric = total_curvature_numeric(w, numeric_tol).value;
  return r;
}

}  // namespace minsurf
