#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include "minsurf/tolerances.hpp"

namespace minsurf {

using Complex = std::complex<double>;

// Polynomial with complex double coefficients stored in ascending powers.
// The zero polynomial has no coefficients; otherwise the leading coefficient
// is nonzero (exact zeros are stripped on construction).
class ComplexPoly {
 public:
  ComplexPoly() = default;
  explicit ComplexPoly(std::vector<Complex> coeffs);
  ComplexPoly(std::initializer_list<Complex> coeffs);

  static ComplexPoly constant(Complex c);
  static ComplexPoly monomial(Complex c, int power);
  // prod (z - r_i)
  static ComplexPoly from_roots(std::span<const Complex> roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  Complex operator[](int k) const;
  Complex leading() const;

  Complex operator()(Complex z) const;
  // Running error bound of Horner evaluation at z (absolute).
  double eval_error_bound(Complex z) const;
  double norm_inf() const;

  ComplexPoly derivative(int order = 1) const;
  // q(h) = p(c + h).
  ComplexPoly shifted(Complex c) const;
  // w^d p(1/w) with d = degree().
  ComplexPoly reversed() const;
  ComplexPoly monic() const;
  // Drops trailing coefficients with |c| <= rel_tol * norm_inf().
  ComplexPoly trimmed(double rel_tol) const;
  // Index of the first coefficient with |c| > rel_tol * norm_inf().
  int low_order(double rel_tol) const;
  // p / z^k, discarding the k lowest coefficients.
  ComplexPoly divide_by_power(int k) const;

  ComplexPoly& operator+=(const ComplexPoly& other);
  ComplexPoly& operator-=(const ComplexPoly& other);
  ComplexPoly& operator*=(const ComplexPoly& other);
  ComplexPoly& operator*=(Complex c);

  friend ComplexPoly operator+(ComplexPoly a, const ComplexPoly& b) { return a += b; }
  friend ComplexPoly operator-(ComplexPoly a, const ComplexPoly& b) { return a -= b; }
  friend ComplexPoly operator*(ComplexPoly a, const ComplexPoly& b) { return a *= b; }
  friend ComplexPoly operator*(ComplexPoly a, Complex c) { return a *= c; }
  friend ComplexPoly operator*(Complex c, ComplexPoly a) { return a *= c; }
  friend bool operator==(const ComplexPoly&, const ComplexPoly&) = default;

 private:
  void normalize();
  std::vector<Complex> coeffs_;
};

enum class PolyOp { add, sub, mul };

ComplexPoly poly_arith(const ComplexPoly& a, const ComplexPoly& b, PolyOp op);

struct DivMod {
  ComplexPoly quotient;
  ComplexPoly remainder;
};

// Euclidean division a = q*b + r with deg r < deg b. Throws DegenerateInput
// for b == 0.
DivMod divmod(const ComplexPoly& a, const ComplexPoly& b);

// (z - c)^k
ComplexPoly linear_power(Complex c, int k);

struct Root {
  Complex value;
  int multiplicity = 1;
};

// All roots with multiplicity (Aberth iteration, inclusion-disk clustering,
// Newton polish). Multiplicities sum to the degree; output is sorted by
// real part, then imaginary part.
std::vector<Root> roots(const ComplexPoly& p, const Tolerances& tol = {});

// Monic gcd, computed from matched roots of a and b.
ComplexPoly poly_gcd(const ComplexPoly& a, const ComplexPoly& b, const Tolerances& tol = {});

// Monic polynomial with the given roots.
ComplexPoly from_roots(std::span<const Root> roots);

// True when |a-b| is within the shared root clustering radius.
bool same_root(Complex a, Complex b, const Tolerances& tol = {});

}  // namespace minsurf
