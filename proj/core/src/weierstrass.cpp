#include "minsurf/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "minsurf/errors.hpp"
#include "minsurf/quadrature.hpp"

namespace minsurf {

namespace {

bool contains_point(std::span<const SpherePoint> list, const SpherePoint& p, const Tolerances& tol) {
  return std::any_of(list.begin(), list.end(), [&](const SpherePoint& q) { return q.near(p, tol); });
}

double point_segment_distance(Complex p, Complex a, Complex b, Complex* closest) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  double t = 0.0;
  if (len2 > 0.0) t = std::clamp(std::real((p - a) * std::conj(ab)) / len2, 0.0, 1.0);
  const Complex q = a + t * ab;
  if (closest) *closest = q;
  return std::abs(p - q);
}

// sum_k c_k (a t + b)^k (c t + d)^{deg - k}
ComplexPoly compose_homogeneous(const ComplexPoly& p, const Mobius& m) {
  const int deg = p.degree();
  const ComplexPoly top({m.b, m.a});
  const ComplexPoly bottom({m.d, m.c});
  std::vector<ComplexPoly> top_pow{ComplexPoly::constant(1.0)};
  std::vector<ComplexPoly> bot_pow{ComplexPoly::constant(1.0)};
  for (int k = 1; k <= deg; ++k) {
    top_pow.push_back(top_pow.back() * top);
    bot_pow.push_back(bot_pow.back() * bottom);
  }
  ComplexPoly out;
  for (int k = 0; k <= deg; ++k) {
    if (p[k] == 0.0) continue;
    out += p[k] * (top_pow[k] * bot_pow[deg - k]);
  }
  return out;
}

ComplexPoly power(const ComplexPoly& p, int k) {
  ComplexPoly out = ComplexPoly::constant(1.0);
  for (int i = 0; i < k; ++i) out *= p;
  return out;
}

}  // namespace

WeierstrassData::WeierstrassData(std::string label, std::vector<RationalMap> phi,
                                 std::optional<std::vector<SpherePoint>> punctures,
                                 std::optional<Complex> basepoint, const Tolerances& tol)
    : label_(std::move(label)), phi_(std::move(phi)), tol_(tol) {
  if (phi_.size() < 3) throw InvalidDatum("Weierstrass datum needs n >= 3 components");

  const std::vector<SpherePoint> detected = detect_punctures(phi_, tol_);
  if (punctures) {
    for (size_t i = 0; i < punctures->size(); ++i) {
      for (size_t j = i + 1; j < punctures->size(); ++j) {
        if ((*punctures)[i].near((*punctures)[j], tol_)) {
          throw InvalidDatum("duplicate puncture " + (*punctures)[i].to_string());
        }
      }
    }
    for (const SpherePoint& p : detected) {
      if (!contains_point(*punctures, p, tol_)) {
        throw InvalidDatum("pole at " + p.to_string() + " is not listed among the punctures");
      }
    }
    punctures_ = *punctures;
  } else {
    punctures_ = detected;
  }

  const std::vector<Complex> finite = finite_punctures();
  auto on_puncture = [&](Complex z) {
    return std::any_of(finite.begin(), finite.end(),
                       [&](Complex p) { return std::abs(z - p) <= 1e3 * tol_.singular() * (1.0 + std::abs(p)); });
  };
  if (basepoint) {
    if (on_puncture(*basepoint)) throw InvalidDatum("basepoint lies on a puncture");
    basepoint_ = *basepoint;
  } else if (!on_puncture(0.0)) {
    basepoint_ = 0.0;
  } else {
    double gap = 1.0;
    for (Complex p : finite) {
      if (std::abs(p) > 1e3 * tol_.singular()) gap = std::min(gap, std::abs(p));
    }
    basepoint_ = 0.5 * gap;
    if (on_puncture(basepoint_)) basepoint_ = -0.5 * gap;
  }
}

std::vector<Complex> WeierstrassData::finite_punctures() const {
  std::vector<Complex> out;
  for (const SpherePoint& p : punctures_) {
    if (!p.is_infinite()) out.push_back(p.value());
  }
  return out;
}

bool WeierstrassData::has_end_at_infinity() const {
  return std::any_of(punctures_.begin(), punctures_.end(), [](const SpherePoint& p) { return p.is_infinite(); });
}

std::vector<Complex> WeierstrassData::eval(Complex z) const {
  std::vector<Complex> out(phi_.size());
  eval(z, out);
  return out;
}

void WeierstrassData::eval(Complex z, std::span<Complex> out) const {
  for (size_t j = 0; j < phi_.size(); ++j) out[j] = phi_[j].is_zero() ? Complex(0.0) : phi_[j](z);
}

std::vector<SpherePoint> detect_punctures(std::span<const RationalMap> phi, const Tolerances& tol) {
  bool any = false;
  std::vector<SpherePoint> finite;
  int order_at_inf = std::numeric_limits<int>::max();
  for (const RationalMap& r : phi) {
    if (r.is_zero()) continue;
    any = true;
    for (const Root& pole : r.poles()) {
      const SpherePoint p = SpherePoint::at(pole.value);
      if (!contains_point(finite, p, tol)) finite.push_back(p);
    }
    order_at_inf = std::min(order_at_inf, -r.degree_difference() - 2);
  }
  if (!any) throw DegenerateInput("all Weierstrass components are zero");
  std::sort(finite.begin(), finite.end(), [](const SpherePoint& a, const SpherePoint& b) {
    const Complex x = a.value(), y = b.value();
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  if (order_at_inf < 0) finite.push_back(SpherePoint::infinity());
  return finite;
}

ClearedForm clear_denominators(std::span<const RationalMap> phi, const Tolerances& tol) {
  std::vector<Root> poles;
  for (const RationalMap& r : phi) {
    if (r.is_zero()) continue;
    for (const Root& p : r.poles()) {
      auto it = std::find_if(poles.begin(), poles.end(), [&](const Root& q) { return same_root(q.value, p.value, tol); });
      if (it == poles.end()) {
        poles.push_back(p);
      } else {
        it->multiplicity = std::max(it->multiplicity, p.multiplicity);
      }
    }
  }
  ClearedForm out;
  out.denominator = from_roots(poles);
  for (const RationalMap& r : phi) {
    if (r.is_zero()) {
      out.numerators.emplace_back();
      continue;
    }
    const ComplexPoly cofactor = divmod(out.denominator, r.den()).quotient;
    out.numerators.push_back(r.num() * cofactor);
  }
  return out;
}

NullCheck validate_null(const WeierstrassData& w) {
  const ClearedForm cf = clear_denominators(w.phi(), w.tolerances());
  ComplexPoly sum;
  double scale = 0.0;
  for (const ComplexPoly& a : cf.numerators) {
    const ComplexPoly sq = a * a;
    scale += sq.norm_inf();
    sum += sq;
  }
  NullCheck out;
  if (scale == 0.0) {
    out.ok = true;
    return out;
  }
  for (const Complex& c : sum.coeffs()) {
    const double rel = std::abs(c) / scale;
    out.defect = std::max(out.defect, rel);
    if (rel > w.tolerances().coefficient()) out.offending.push_back(rel);
  }
  out.ok = out.defect <= w.tolerances().coefficient();
  return out;
}

ResidueCheck check_residues_real(const WeierstrassData& w) {
  ResidueCheck out;
  for (const SpherePoint& p : w.punctures()) {
    EndResidues er{p, {}};
    for (const RationalMap& r : w.phi()) {
      const Complex res = form_residue(r, p, w.tolerances());
      out.worst_imag = std::max(out.worst_imag, std::abs(res.imag()));
      er.residues.push_back(res);
    }
    out.ends.push_back(std::move(er));
  }
  out.ok = out.worst_imag <= w.tolerances().residue();
  return out;
}

MetricOrder metric_order_at(const WeierstrassData& w, const SpherePoint& p) {
  MetricOrder out;
  out.mu = std::numeric_limits<int>::max();
  for (const RationalMap& r : w.phi()) {
    if (r.is_zero()) continue;
    out.mu = std::min(out.mu, form_order(r, p, w.tolerances()));
  }
  out.is_end = contains_point(w.punctures(), p, w.tolerances());
  return out;
}

Validation validate(const WeierstrassData& w) {
  Validation v;
  v.null = validate_null(w);
  v.residues = check_residues_real(w);
  v.complete = true;
  for (const SpherePoint& p : w.punctures()) {
    v.orders.push_back(metric_order_at(w, p));
    if (v.orders.back().mu > -2) v.complete = false;
  }
  return v;
}

MetricSample conformal_factor(const WeierstrassData& w, Complex z) {
  for (Complex p : w.finite_punctures()) {
    if (std::abs(z - p) <= w.tolerances().singular() * (1.0 + std::abs(p))) {
      throw NearSingularity("metric is singular at puncture " + SpherePoint::at(p).to_string());
    }
  }
  double sum = 0.0;
  for (const Complex& v : w.eval(z)) sum += std::norm(v);
  if (!std::isfinite(sum)) throw NearSingularity("metric overflow near a puncture");
  return {z, 2.0 * sum};
}

RationalMap pull_back_form(const RationalMap& r, const Mobius& m, const Tolerances& tol) {
  if (r.is_zero()) return r;
  const ComplexPoly lin({m.d, m.c});
  const int exponent = r.den().degree() - r.num().degree() - 2;
  ComplexPoly num = m.determinant() * compose_homogeneous(r.num(), m);
  ComplexPoly den = compose_homogeneous(r.den(), m);
  if (exponent >= 0) {
    num *= power(lin, exponent);
  } else {
    den *= power(lin, -exponent);
  }
  return RationalMap(std::move(num), std::move(den), tol);
}

WeierstrassData reparametrize(const WeierstrassData& w, const Mobius& m) {
  if (std::abs(m.determinant()) == 0.0) throw DegenerateInput("singular Mobius transformation");
  std::vector<RationalMap> phi;
  for (const RationalMap& r : w.phi()) phi.push_back(pull_back_form(r, m, w.tolerances()));
  return WeierstrassData(w.label() + " (reparametrized)", std::move(phi), std::nullopt, std::nullopt,
                         w.tolerances());
}

Immersion::Immersion(const WeierstrassData& w)
    : w_(&w), finite_(w.finite_punctures()), end_at_infinity_(w.has_end_at_infinity()) {
  singular_radius_ = w.tolerances().singular();
  clearance_.resize(finite_.size(), 0.25);
  for (size_t i = 0; i < finite_.size(); ++i) {
    double sep = 1.0;
    for (size_t j = 0; j < finite_.size(); ++j) {
      if (i != j) sep = std::min(sep, std::abs(finite_[i] - finite_[j]));
    }
    clearance_[i] = 0.25 * sep;
  }
}

void Immersion::check_regular(Complex z) const {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw NearSingularity("immersion evaluated at a non-finite point");
  }
  for (Complex p : finite_) {
    if (std::abs(z - p) <= singular_radius_ * (1.0 + std::abs(p))) {
      std::ostringstream os;
      os << "immersion evaluated within " << singular_radius_ << " of puncture " << SpherePoint::at(p).to_string();
      throw NearSingularity(os.str());
    }
  }
  if (end_at_infinity_ && std::abs(z) * singular_radius_ >= 1.0) {
    throw NearSingularity("immersion evaluated too close to the end at infinity");
  }
}

std::vector<Complex> Immersion::route(Complex a, Complex b) const {
  std::vector<Complex> out{a};
  // Explicit stack of pending targets; each pop extends the route from its
  // current end toward the target, splitting it when a puncture is too close.
  std::vector<std::pair<Complex, int>> pending{{b, 0}};
  int budget = 4096;
  while (!pending.empty()) {
    const auto [target, depth] = pending.back();
    const Complex from = out.back();
    int worst = -1;
    double worst_ratio = 1.0;
    Complex worst_closest = 0.0;
    for (size_t i = 0; i < finite_.size(); ++i) {
      const Complex p = finite_[i];
      const double allowed = std::min(clearance_[i], 0.5 * std::min(std::abs(from - p), std::abs(target - p)));
      Complex q;
      const double d = point_segment_distance(p, from, target, &q);
      if (allowed > 0.0 && d < allowed && d / allowed < worst_ratio) {
        worst = static_cast<int>(i);
        worst_ratio = d / allowed;
        worst_closest = q;
      }
    }
    if (worst < 0 || depth > 48 || --budget <= 0) {
      out.push_back(target);
      pending.pop_back();
      continue;
    }
    const Complex p = finite_[worst];
    Complex dir = worst_closest - p;
    if (std::abs(dir) <= 1e-14 * (1.0 + std::abs(p))) dir = Complex(0.0, 1.0) * (target - from);
    dir /= std::abs(dir);
    const double radius = std::min(clearance_[worst], std::max(std::abs(from - p), std::abs(target - p)));
    const Complex waypoint = p + radius * dir;
    pending.back().second = depth + 1;
    pending.push_back({waypoint, depth + 1});
  }
  return out;
}

std::vector<Complex> Immersion::integrate_segment(Complex a, Complex b) const {
  const size_t n = static_cast<size_t>(w_->n());
  if (a == b) return std::vector<Complex>(n, 0.0);
  const Complex delta = b - a;
  auto integrand = [&](double t, std::span<Complex> out) {
    w_->eval(a + t * delta, out);
    for (Complex& v : out) v *= delta;
  };
  const Tolerances& tol = w_->tolerances();
  QuadratureResult q = integrate_adaptive(integrand, n, 0.0, 1.0, tol.quadrature_rel(), tol.quadrature_abs());
  return std::move(q.value);
}

std::vector<double> Immersion::along_polyline(std::span<const Complex> vertices) const {
  std::vector<Complex> acc(static_cast<size_t>(w_->n()), 0.0);
  for (size_t i = 1; i < vertices.size(); ++i) {
    const auto seg = integrate_segment(vertices[i - 1], vertices[i]);
    for (size_t d = 0; d < acc.size(); ++d) acc[d] += seg[d];
  }
  std::vector<double> f(acc.size());
  for (size_t d = 0; d < acc.size(); ++d) f[d] = 2.0 * acc[d].real();
  return f;
}

std::vector<double> Immersion::continue_to(Complex from, std::span<const double> f_from, Complex to) const {
  check_regular(to);
  const std::vector<Complex> path = route(from, to);
  std::vector<double> f = along_polyline(path);
  for (size_t d = 0; d < f.size(); ++d) f[d] += f_from[d];
  return f;
}

std::vector<double> Immersion::along_segment(Complex from, std::span<const double> f_from, Complex to) const {
  check_regular(to);
  const Complex pts[2] = {from, to};
  std::vector<double> f = along_polyline(pts);
  for (size_t d = 0; d < f.size(); ++d) f[d] += f_from[d];
  return f;
}

std::vector<double> Immersion::operator()(Complex z) const {
  const std::vector<double> origin(static_cast<size_t>(w_->n()), 0.0);
  return continue_to(w_->basepoint(), origin, z);
}

std::vector<double> immersion_eval(const WeierstrassData& w, Complex z) { return Immersion(w)(z); }

}  // namespace minsurf
