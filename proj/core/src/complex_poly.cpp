#include "minsurf/complex_poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "minsurf/errors.hpp"

namespace minsurf {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct HornerResult {
  Complex value;
  Complex derivative;
};

HornerResult horner2(std::span<const Complex> c, Complex z) {
  Complex p = c.back();
  Complex dp = 0.0;
  for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) {
    dp = dp * z + p;
    p = p * z + c[k];
  }
  return {p, dp};
}

// Simultaneous Aberth-Ehrlich iteration for a polynomial with p(0) != 0.
std::vector<Complex> aberth(const ComplexPoly& p) {
  const int n = p.degree();
  const auto c = p.coeffs();
  if (n == 1) return {-c[0] / c[1]};

  const double radius = std::pow(std::abs(c[0]) / std::abs(c[n]), 1.0 / n);
  std::vector<Complex> z(n);
  for (int i = 0; i < n; ++i) {
    const double angle = 2.0 * std::numbers::pi * i / n + 0.4;
    z[i] = std::polar(radius, angle);
  }

  std::vector<char> done(n, 0);
  for (int iter = 0; iter < 2000; ++iter) {
    bool moving = false;
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      const auto [pv, dv] = horner2(c, z[i]);
      if (std::abs(pv) <= p.eval_error_bound(z[i])) {
        done[i] = 1;
        continue;
      }
      Complex sum = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      }
      Complex step;
      if (dv == 0.0) {
        step = pv / (pv * sum - 1.0);
      } else {
        const Complex ratio = pv / dv;
        step = ratio / (1.0 - ratio * sum);
      }
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
        z[i] += std::polar(1e-3 * (1.0 + std::abs(z[i])), 1.0 + i);
        moving = true;
        continue;
      }
      z[i] -= step;
      if (std::abs(step) > 4.0 * kEps * (1.0 + std::abs(z[i]))) {
        moving = true;
      } else {
        done[i] = 1;
      }
    }
    if (!moving) break;
  }
  return z;
}

Complex newton_refine(const ComplexPoly& q, Complex start, double max_shift) {
  const ComplexPoly dq = q.derivative();
  Complex x = start;
  for (int it = 0; it < 60; ++it) {
    const Complex d = dq(x);
    if (d == 0.0) break;
    const Complex step = q(x) / d;
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
    x -= step;
    if (std::abs(x - start) > max_shift) return start;
    if (std::abs(step) <= 2.0 * kEps * (1.0 + std::abs(x))) break;
  }
  return x;
}

int find_root(std::vector<int>& parent, int i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

}  // namespace

ComplexPoly::ComplexPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

ComplexPoly::ComplexPoly(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { normalize(); }

ComplexPoly ComplexPoly::constant(Complex c) { return ComplexPoly({c}); }

ComplexPoly ComplexPoly::monomial(Complex c, int power) {
  std::vector<Complex> v(power + 1, 0.0);
  v[power] = c;
  return ComplexPoly(std::move(v));
}

ComplexPoly ComplexPoly::from_roots(std::span<const Complex> roots) {
  ComplexPoly p = constant(1.0);
  for (const Complex r : roots) p *= ComplexPoly({-r, 1.0});
  return p;
}

void ComplexPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

Complex ComplexPoly::operator[](int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0.0;
  return coeffs_[k];
}

Complex ComplexPoly::leading() const { return coeffs_.empty() ? Complex(0.0) : coeffs_.back(); }

Complex ComplexPoly::operator()(Complex z) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double ComplexPoly::eval_error_bound(Complex z) const {
  // Standard running bound for Horner's rule.
  const double az = std::abs(z);
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * az + std::abs(*it);
  return 4.0 * kEps * acc * std::max(1, degree());
}

double ComplexPoly::norm_inf() const {
  double m = 0.0;
  for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

ComplexPoly ComplexPoly::derivative(int order) const {
  std::vector<Complex> c = coeffs_;
  for (int o = 0; o < order; ++o) {
    if (c.size() <= 1) return {};
    std::vector<Complex> d(c.size() - 1);
    for (size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * static_cast<double>(k);
    c = std::move(d);
  }
  return ComplexPoly(std::move(c));
}

ComplexPoly ComplexPoly::shifted(Complex c) const {
  std::vector<Complex> a = coeffs_;
  const int n = static_cast<int>(a.size()) - 1;
  for (int i = 0; i < n; ++i) {
    for (int j = n - 1; j >= i; --j) a[j] += c * a[j + 1];
  }
  return ComplexPoly(std::move(a));
}

ComplexPoly ComplexPoly::reversed() const {
  std::vector<Complex> a(coeffs_.rbegin(), coeffs_.rend());
  return ComplexPoly(std::move(a));
}

ComplexPoly ComplexPoly::monic() const {
  if (is_zero()) return {};
  ComplexPoly p = *this;
  p *= 1.0 / leading();
  p.coeffs_.back() = 1.0;
  return p;
}

ComplexPoly ComplexPoly::trimmed(double rel_tol) const {
  const double cut = rel_tol * norm_inf();
  std::vector<Complex> a = coeffs_;
  while (!a.empty() && std::abs(a.back()) <= cut) a.pop_back();
  return ComplexPoly(std::move(a));
}

int ComplexPoly::low_order(double rel_tol) const {
  const double cut = rel_tol * norm_inf();
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (std::abs(coeffs_[k]) > cut) return static_cast<int>(k);
  }
  return static_cast<int>(coeffs_.size());
}

ComplexPoly ComplexPoly::divide_by_power(int k) const {
  if (k >= static_cast<int>(coeffs_.size())) return {};
  return ComplexPoly(std::vector<Complex>(coeffs_.begin() + k, coeffs_.end()));
}

ComplexPoly& ComplexPoly::operator+=(const ComplexPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
  for (size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  normalize();
  return *this;
}

ComplexPoly& ComplexPoly::operator-=(const ComplexPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
  for (size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  normalize();
  return *this;
}

ComplexPoly& ComplexPoly::operator*=(const ComplexPoly& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Complex> out(coeffs_.size() + other.coeffs_.size() - 1, 0.0);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    for (size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

ComplexPoly& ComplexPoly::operator*=(Complex c) {
  for (Complex& a : coeffs_) a *= c;
  normalize();
  return *this;
}

ComplexPoly poly_arith(const ComplexPoly& a, const ComplexPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::add:
      return a + b;
    case PolyOp::sub:
      return a - b;
    case PolyOp::mul:
      return a * b;
  }
  return {};
}

DivMod divmod(const ComplexPoly& a, const ComplexPoly& b) {
  if (b.is_zero()) throw DegenerateInput("polynomial division by zero");
  if (a.degree() < b.degree()) return {ComplexPoly(), a};
  std::vector<Complex> rem(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const int dq = a.degree() - db;
  std::vector<Complex> q(dq + 1, 0.0);
  const Complex lead = b.leading();
  for (int k = dq; k >= 0; --k) {
    const Complex t = rem[k + db] / lead;
    q[k] = t;
    for (int j = 0; j <= db; ++j) rem[k + j] -= t * b[j];
    rem[k + db] = 0.0;
  }
  rem.resize(db);
  return {ComplexPoly(std::move(q)), ComplexPoly(std::move(rem))};
}

ComplexPoly linear_power(Complex c, int k) {
  ComplexPoly p = ComplexPoly::constant(1.0);
  const ComplexPoly lin({-c, 1.0});
  for (int i = 0; i < k; ++i) p *= lin;
  return p;
}

bool same_root(Complex a, Complex b, const Tolerances& tol) {
  return std::abs(a - b) <= tol.cluster() * (1.0 + std::max(std::abs(a), std::abs(b)));
}

std::vector<Root> roots(const ComplexPoly& p, const Tolerances& tol) {
  if (p.is_zero() || p.degree() < 1) {
    throw DegenerateInput("roots: polynomial must have degree >= 1");
  }
  // Exact zero roots first.
  int zeros = 0;
  while (p[zeros] == 0.0) ++zeros;
  const ComplexPoly q = p.divide_by_power(zeros);

  std::vector<Root> out;
  if (zeros > 0) out.push_back({0.0, zeros});

  if (q.degree() >= 1) {
    const int n = q.degree();
    std::vector<Complex> z = aberth(q);

    // Inclusion radii: a disk of radius n|q/q'| around an approximation
    // contains a root. Overlapping disks belong to one cluster.
    std::vector<double> rad(n);
    for (int i = 0; i < n; ++i) {
      const auto [pv, dv] = horner2(q.coeffs(), z[i]);
      const double floor_r = tol.cluster() * (1.0 + std::abs(z[i]));
      const double num = std::abs(pv) + q.eval_error_bound(z[i]);
      rad[i] = std::abs(dv) > 0.0 ? std::max(2.0 * n * num / std::abs(dv), floor_r) : floor_r;
    }
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (std::abs(z[i] - z[j]) <= rad[i] + rad[j]) parent[find_root(parent, i)] = find_root(parent, j);
      }
    }
    std::vector<std::vector<int>> groups(n);
    for (int i = 0; i < n; ++i) groups[find_root(parent, i)].push_back(i);

    for (const auto& g : groups) {
      if (g.empty()) continue;
      const int k = static_cast<int>(g.size());
      Complex mean = 0.0;
      double spread = 0.0;
      for (int i : g) mean += z[i];
      mean /= static_cast<double>(k);
      for (int i : g) spread = std::max(spread, std::abs(z[i] - mean) + rad[i]);
      // The (k-1)-th derivative has a simple root at a k-fold root.
      const ComplexPoly dk = q.derivative(k - 1);
      const Complex refined = newton_refine(dk, mean, 2.0 * spread + tol.cluster() * (1.0 + std::abs(mean)));
      out.push_back({refined, k});
    }
  }

  // Clusters whose refined centers coincide are one root.
  std::vector<Root> merged;
  for (const Root& r : out) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const Root& m) { return same_root(m.value, r.value, tol); });
    if (it == merged.end()) {
      merged.push_back(r);
    } else {
      const double wa = it->multiplicity, wb = r.multiplicity;
      it->value = (it->value * wa + r.value * wb) / (wa + wb);
      it->multiplicity += r.multiplicity;
    }
  }
  // Rounding residue in a component, e.g. 1e-40i on a real root.
  for (Root& r : merged) {
    const double floor = 8.0 * std::numeric_limits<double>::epsilon() * std::abs(r.value);
    if (std::abs(r.value.real()) <= floor) r.value.real(0.0);
    if (std::abs(r.value.imag()) <= floor) r.value.imag(0.0);
  }
  std::sort(merged.begin(), merged.end(), [&](const Root& a, const Root& b) {
    const double gap = tol.cluster() * (1.0 + std::max(std::abs(a.value), std::abs(b.value)));
    if (std::abs(a.value.real() - b.value.real()) > gap) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return merged;
}

ComplexPoly from_roots(std::span<const Root> rs) {
  ComplexPoly p = ComplexPoly::constant(1.0);
  for (const Root& r : rs) p *= linear_power(r.value, r.multiplicity);
  return p;
}

ComplexPoly poly_gcd(const ComplexPoly& a, const ComplexPoly& b, const Tolerances& tol) {
  if (a.is_zero() && b.is_zero()) throw DegenerateInput("gcd of two zero polynomials");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return ComplexPoly::constant(1.0);

  const auto ra = roots(a, tol);
  const auto rb = roots(b, tol);
  std::vector<Root> common;
  for (const Root& x : ra) {
    for (const Root& y : rb) {
      if (same_root(x.value, y.value, tol)) {
        common.push_back({0.5 * (x.value + y.value), std::min(x.multiplicity, y.multiplicity)});
        break;
      }
    }
  }
  return from_roots(common);
}

}  // namespace minsurf
