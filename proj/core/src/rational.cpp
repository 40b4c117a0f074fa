#include "minsurf/rational.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "minsurf/errors.hpp"

namespace minsurf {

namespace {

// r = h^order * num(h) / den(h) with num(0) != 0 and den(0) != 0.
struct LocalRatio {
  ComplexPoly num;
  ComplexPoly den;
  int order = 0;
};

LocalRatio localize(const RationalMap& r, const SpherePoint& center, const Tolerances& tol) {
  if (r.is_zero()) throw ZeroFunction("Laurent expansion of the zero function has no order");
  LocalRatio out;
  if (center.is_infinite()) {
    out.num = r.num().reversed();
    out.den = r.den().reversed();
    out.order = r.den().degree() - r.num().degree();
    return out;
  }
  const Complex c = center.value();
  ComplexPoly n = r.num().shifted(c);
  ComplexPoly d = r.den().shifted(c);
  const int ln = n.low_order(tol.coefficient());
  const int ld = d.low_order(tol.coefficient());
  out.num = n.divide_by_power(ln);
  out.den = d.divide_by_power(ld);
  out.order = ln - ld;
  return out;
}

std::vector<Complex> series_divide(const ComplexPoly& num, const ComplexPoly& den, int count) {
  std::vector<Complex> q(std::max(count, 0), 0.0);
  const Complex d0 = den[0];
  for (int k = 0; k < count; ++k) {
    Complex acc = num[k];
    for (int i = 1; i <= std::min(k, den.degree()); ++i) acc -= den[i] * q[k - i];
    q[k] = acc / d0;
  }
  return q;
}

}  // namespace

Complex SpherePoint::value() const {
  if (infinite_) throw InvalidDatum("the point at infinity has no finite coordinate");
  return z_;
}

bool SpherePoint::near(const SpherePoint& other, const Tolerances& tol) const {
  if (infinite_ || other.infinite_) return infinite_ == other.infinite_;
  return same_root(z_, other.z_, tol);
}

std::string SpherePoint::to_string() const {
  if (infinite_) return "inf";
  std::ostringstream os;
  os.precision(12);
  os << z_.real();
  if (z_.imag() >= 0) os << "+";
  os << z_.imag() << "i";
  return os.str();
}

Complex LaurentSeries::coefficient(int exponent) const {
  if (exponent < order) return 0.0;
  const int idx = exponent - order;
  if (idx >= static_cast<int>(coeffs.size())) {
    throw DegenerateInput("Laurent coefficient requested beyond the expansion depth");
  }
  return coeffs[idx];
}

Complex LaurentSeries::operator()(Complex h) const {
  Complex acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * h + *it;
  return acc * std::pow(h, order);
}

RationalMap::RationalMap(ComplexPoly num, ComplexPoly den, const Tolerances& tol)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DegenerateInput("rational map with zero denominator");
  if (num_.is_zero()) {
    den_ = ComplexPoly::constant(1.0);
    return;
  }
  if (!den_.is_constant() && !num_.is_constant()) {
    const ComplexPoly g = poly_gcd(num_, den_, tol);
    if (g.degree() >= 1) {
      num_ = divmod(num_, g).quotient;
      den_ = divmod(den_, g).quotient;
    }
  }
  if (!den_.is_constant()) poles_ = roots(den_, tol);
}

Complex RationalMap::den_at(Complex z) const {
  if (poles_.empty()) return den_(z);
  Complex v = den_.leading();
  for (const Root& p : poles_) {
    const Complex f = z - p.value;
    for (int i = 0; i < p.multiplicity; ++i) v *= f;
  }
  return v;
}

Complex RationalMap::derivative_at(Complex z) const {
  if (poles_.empty()) {
    const Complex d = den_(z);
    return (num_.derivative()(z) * d - num_(z) * den_.derivative()(z)) / (d * d);
  }
  // (num' - num * D'/D) / D with D'/D = sum m / (z - p)
  Complex log_derivative = 0.0;
  for (const Root& p : poles_) log_derivative += static_cast<double>(p.multiplicity) / (z - p.value);
  return (num_.derivative()(z) - num_(z) * log_derivative) / den_at(z);
}

LaurentSeries laurent_expand(const RationalMap& r, const SpherePoint& center, int depth, const Tolerances& tol) {
  if (depth < 0) throw DegenerateInput("Laurent depth must be nonnegative");
  const LocalRatio loc = localize(r, center, tol);
  return LaurentSeries{center, loc.order, series_divide(loc.num, loc.den, depth + 1)};
}

LaurentSeries laurent_expand_through(const RationalMap& r, const SpherePoint& center, int max_exponent,
                                     const Tolerances& tol) {
  const LocalRatio loc = localize(r, center, tol);
  const int count = std::max(1, max_exponent - loc.order + 1);
  return LaurentSeries{center, loc.order, series_divide(loc.num, loc.den, count)};
}

Complex residue(const RationalMap& r, Complex pole, const Tolerances& tol) {
  if (r.is_zero()) return 0.0;
  const LaurentSeries s = laurent_expand_through(r, SpherePoint::at(pole), -1, tol);
  return s.coefficient(-1);
}

int function_order(const RationalMap& r, const SpherePoint& p, const Tolerances& tol) {
  return localize(r, p, tol).order;
}

LaurentSeries form_expand_through(const RationalMap& r, const SpherePoint& center, int max_exponent,
                                  const Tolerances& tol) {
  if (!center.is_infinite()) return laurent_expand_through(r, center, max_exponent, tol);
  // r(z) dz = -r(1/w) w^{-2} dw
  LaurentSeries s = laurent_expand_through(r, center, max_exponent + 2, tol);
  s.order -= 2;
  for (Complex& c : s.coeffs) c = -c;
  return s;
}

int form_order(const RationalMap& r, const SpherePoint& p, const Tolerances& tol) {
  const int o = function_order(r, p, tol);
  return p.is_infinite() ? o - 2 : o;
}

Complex form_residue(const RationalMap& r, const SpherePoint& p, const Tolerances& tol) {
  if (r.is_zero()) return 0.0;
  return form_expand_through(r, p, -1, tol).coefficient(-1);
}

}  // namespace minsurf
