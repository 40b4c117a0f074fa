#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minsurf/complex_poly.hpp"

namespace minsurf {

// A point of the Riemann sphere: a finite complex number or infinity.
class SpherePoint {
 public:
  SpherePoint() = default;
  static SpherePoint at(Complex z) { return SpherePoint(false, z); }
  static SpherePoint infinity() { return SpherePoint(true, 0.0); }

  bool is_infinite() const { return infinite_; }
  // Throws InvalidDatum for the point at infinity.
  Complex value() const;
  // Same point within the root clustering radius.
  bool near(const SpherePoint& other, const Tolerances& tol = {}) const;
  std::string to_string() const;

  friend bool operator==(const SpherePoint&, const SpherePoint&) = default;

 private:
  SpherePoint(bool inf, Complex z) : infinite_(inf), z_(z) {}
  bool infinite_ = false;
  Complex z_ = 0.0;
};

// Truncated Laurent series sum_{k=0}^{depth} coeffs[k] h^{order+k} in the
// local coordinate h = z - center, or h = 1/z at infinity.
struct LaurentSeries {
  SpherePoint center;
  int order = 0;
  std::vector<Complex> coeffs;

  int depth() const { return static_cast<int>(coeffs.size()) - 1; }
  // Coefficient of h^exponent; zero below the order, throws past the depth.
  Complex coefficient(int exponent) const;
  Complex operator()(Complex h) const;
};

// Reduced ratio of polynomials. Construction cancels common roots of num and
// den (within the clustering tolerance) and caches the poles.
class RationalMap {
 public:
  RationalMap() : den_(ComplexPoly::constant(1.0)) {}
  RationalMap(ComplexPoly num, ComplexPoly den, const Tolerances& tol = {});
  static RationalMap polynomial(ComplexPoly p) { return RationalMap(std::move(p), ComplexPoly::constant(1.0)); }

  const ComplexPoly& num() const { return num_; }
  const ComplexPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  // deg num - deg den (meaningless for the zero map).
  int degree_difference() const { return num_.degree() - den_.degree(); }
  const std::vector<Root>& poles() const { return poles_; }

  // The denominator is evaluated in product form over the poles, which keeps
  // full relative accuracy next to multiple poles.
  Complex operator()(Complex z) const { return num_(z) / den_at(z); }
  Complex derivative_at(Complex z) const;
  Complex den_at(Complex z) const;

 private:
  ComplexPoly num_;
  ComplexPoly den_;
  std::vector<Root> poles_;
};

// Laurent expansion of the function r at center with depth+1 coefficients.
// At infinity the expansion is of r(1/w) in w; no 1-form Jacobian applied.
LaurentSeries laurent_expand(const RationalMap& r, const SpherePoint& center, int depth,
                             const Tolerances& tol = {});

// Same, but expanded up to and including h^max_exponent (at least one
// coefficient).
LaurentSeries laurent_expand_through(const RationalMap& r, const SpherePoint& center, int max_exponent,
                                     const Tolerances& tol = {});

// Coefficient of (z - pole)^{-1}; zero at regular points.
Complex residue(const RationalMap& r, Complex pole, const Tolerances& tol = {});

// Order of the function r at a sphere point (r(1/w) in w at infinity).
int function_order(const RationalMap& r, const SpherePoint& p, const Tolerances& tol = {});

// Expansion of the 1-form r dz: identical to laurent_expand_through at finite
// points; at infinity it expands -r(1/w)/w^2 in w.
LaurentSeries form_expand_through(const RationalMap& r, const SpherePoint& center, int max_exponent,
                                  const Tolerances& tol = {});

// Order of the 1-form r dz at p. Zero maps have no order; callers skip them.
int form_order(const RationalMap& r, const SpherePoint& p, const Tolerances& tol = {});

// Residue of the 1-form r dz at p (w-coordinate at infinity).
Complex form_residue(const RationalMap& r, const SpherePoint& p, const Tolerances& tol = {});

}  // namespace minsurf
