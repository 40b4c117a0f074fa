#pragma once

// Randomized property checks shared by the unit tests and the acceptance
// binary. Each returns the worst observed value so callers can compare it
// with their own threshold.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "minsurf/catalog.hpp"
#include "minsurf/curvature.hpp"
#include "minsurf/weierstrass.hpp"

namespace minsurf::props {

inline Complex random_complex(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  return {g(rng), g(rng)};
}

// |sum of residues of r dz over the sphere| relative to the largest residue,
// for a random rational map with deg num, deg den in [0, 5].
inline double residue_sum_defect(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 5);
  std::vector<Complex> num(static_cast<size_t>(deg(rng)) + 1), den_roots(static_cast<size_t>(deg(rng)) + 1);
  for (auto& c : num) c = random_complex(rng);
  for (auto& c : den_roots) c = random_complex(rng, 1.5);
  const RationalMap r(ComplexPoly(num), ComplexPoly::from_roots(den_roots) * random_complex(rng));
  Complex sum = 0.0;
  double biggest = 1e-300;
  for (const Root& p : r.poles()) {
    const Complex res = form_residue(r, SpherePoint::at(p.value));
    sum += res;
    biggest = std::max(biggest, std::abs(res));
  }
  const Complex at_inf = form_residue(r, SpherePoint::infinity());
  sum += at_inf;
  biggest = std::max(biggest, std::abs(at_inf));
  return std::abs(sum) / biggest;
}

// A random point with |z| <= 2.5 at distance >= 0.15 from every finite
// puncture.
inline Complex random_regular_point(const WeierstrassData& w, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.5, 2.5);
  for (;;) {
    const Complex z(u(rng), u(rng));
    if (std::abs(z) > 2.5) continue;
    bool ok = true;
    for (Complex p : w.finite_punctures()) ok = ok && std::abs(z - p) >= 0.15;
    if (ok) return z;
  }
}

// Conformality of f at z from central differences: returns the larger of
// ||f_x|^2 - |f_y|^2| and 2|f_x . f_y|, and ||f_x|^2 - lambda^2|, each relative
// to lambda^2.
inline double conformality_defect(const WeierstrassData& w, const Immersion& f, Complex z) {
  const std::vector<double> f0 = f(z);
  const double h = 1e-4;
  auto at = [&](Complex to) { return f.along_segment(z, f0, to); };
  const auto xp = at(z + h), xm = at(z - h);
  const auto yp = at(z + Complex(0, h)), ym = at(z - Complex(0, h));
  double fx2 = 0, fy2 = 0, fxy = 0;
  for (int j = 0; j < w.n(); ++j) {
    const double fx = (xp[j] - xm[j]) / (2 * h);
    const double fy = (yp[j] - ym[j]) / (2 * h);
    fx2 += fx * fx;
    fy2 += fy * fy;
    fxy += fx * fy;
  }
  const double lam2 = conformal_factor(w, z).lambda_sq;
  return std::max({std::abs(fx2 - fy2), 2 * std::abs(fxy), std::abs(fx2 - lam2)}) / lam2;
}

inline double distance_to_segment(Complex p, Complex a, Complex b) {
  const Complex d = b - a;
  const double t = std::clamp(std::real(std::conj(d) * (p - a)) / std::norm(d), 0.0, 1.0);
  return std::abs(p - (a + t * d));
}

// Integrates along basepoint -> w1 -> w2 -> z with random detours and returns
// the largest difference from the routed evaluation, relative to 1 + |f|.
inline double path_dependence(const WeierstrassData& w, const Immersion& f, Complex z, std::mt19937_64& rng) {
  const std::vector<double> ref = f(z);
  double ref_norm = 0;
  for (double x : ref) ref_norm = std::max(ref_norm, std::abs(x));
  for (;;) {
    std::vector<Complex> poly{w.basepoint(), random_regular_point(w, rng), random_regular_point(w, rng), z};
    bool clear = true;
    for (size_t i = 1; i < poly.size(); ++i) {
      for (Complex p : w.finite_punctures()) clear = clear && distance_to_segment(p, poly[i - 1], poly[i]) > 0.1;
    }
    if (!clear) continue;
    const std::vector<double> alt = f.along_polyline(poly);
    double worst = 0;
    for (size_t j = 0; j < ref.size(); ++j) worst = std::max(worst, std::abs(alt[j] - ref[j]));
    return worst / (1.0 + ref_norm);
  }
}

inline Mobius random_mobius(std::mt19937_64& rng) {
  for (;;) {
    Mobius m{random_complex(rng), random_complex(rng), random_complex(rng), random_complex(rng)};
    if (std::abs(m.determinant()) > 0.2) return m;
  }
}

}  // namespace minsurf::props
