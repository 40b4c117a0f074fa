#include "minsurf/ends.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "minsurf/errors.hpp"

namespace minsurf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double norm(std::span<const Complex> v) {
  double s = 0.0;
  for (Complex x : v) s += std::norm(x);
  return std::sqrt(s);
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Complex bilinear(std::span<const Complex> a, std::span<const Complex> b) {
  Complex s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Standard basis vector with the largest part orthogonal to e1, e2, made
// orthonormal to both.
std::vector<double> complete_frame(const std::vector<double>& e1, const std::vector<double>& e2) {
  const size_t n = e1.size();
  std::vector<double> best;
  double best_norm = -1.0;
  for (size_t j = 0; j < n; ++j) {
    std::vector<double> v(n, 0.0);
    v[j] = 1.0;
    const double c1 = dot(v, e1);
    const double c2 = dot(v, e2);
    for (size_t i = 0; i < n; ++i) v[i] -= c1 * e1[i] + c2 * e2[i];
    const double len = norm(v);
    if (len > best_norm * (1.0 + 1e-12)) {
      best_norm = len;
      best = std::move(v);
    }
  }
  for (double& x : best) x /= best_norm;
  return best;
}

double wrap_angle(double x) {
  while (x > std::numbers::pi) x -= kTwoPi;
  while (x <= -std::numbers::pi) x += kTwoPi;
  return x;
}

// Values of f along rays of an end chart. Each ray starts at an anchor on
// the chart circle; anchors are chained around that circle from a single
// full evaluation, and every new point is integrated from the nearest point
// already known on its ray.
class RayCache {
 public:
  RayCache(const Immersion& f, EndChart chart) : f_(f), chart_(chart) {}

  const EndChart& chart() const { return chart_; }

  std::vector<double> at(double theta, double r) {
    Ray& ray = get_ray(theta);
    const double s = std::log(r);
    auto hit = ray.points.find(s);
    if (hit != ray.points.end()) return hit->second;
    auto hi = ray.points.lower_bound(s);
    auto nearest = hi;
    if (hi == ray.points.end() || (hi != ray.points.begin() && s - std::prev(hi)->first < hi->first - s)) {
      nearest = std::prev(hi);
    }
    const Complex from = chart_.to_z(std::polar(std::exp(nearest->first), theta));
    const Complex to = chart_.to_z(std::polar(r, theta));
    std::vector<double> value = f_.along_segment(from, nearest->second, to);
    ray.points.emplace(s, value);
    return value;
  }

 private:
  struct Ray {
    std::map<double, std::vector<double>> points;  // keyed by log r
  };

  Complex anchor_z(double theta) const { return chart_.to_z(std::polar(chart_.radius, theta)); }

  Ray& get_ray(double theta) {
    auto it = rays_.find(theta);
    if (it != rays_.end()) return it->second;
    std::vector<double> value;
    if (rays_.empty()) {
      value = f_(anchor_z(theta));
    } else {
      double best = theta;
      double best_gap = 1e300;
      for (const auto& [t, ray] : rays_) {
        const double gap = std::abs(wrap_angle(theta - t));
        if (gap < best_gap) {
          best_gap = gap;
          best = t;
        }
      }
      const std::vector<double>& start = rays_.at(best).points.at(std::log(chart_.radius));
      // Follow the chart circle in short chords.
      const double delta = wrap_angle(theta - best);
      const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(delta) / (std::numbers::pi / 16))));
      std::vector<Complex> arc;
      for (int i = 0; i <= steps; ++i) arc.push_back(anchor_z(best + delta * i / steps));
      value = f_.along_polyline(arc);
      for (size_t d = 0; d < value.size(); ++d) value[d] += start[d];
    }
    Ray& ray = rays_[theta];
    ray.points.emplace(std::log(chart_.radius), std::move(value));
    return ray;
  }

  const Immersion& f_;
  EndChart chart_;
  std::map<double, Ray> rays_;
};

AsymptoticModel matched_model(const WeierstrassData& w, const EndChart& chart, std::vector<Complex> c2,
                              std::vector<double> c1) {
  const size_t n = static_cast<size_t>(w.n());
  const double reference = 0.5 * chart.radius;
  AsymptoticModel raw(chart, c2, c1, std::vector<double>(n, 0.0), reference);
  Immersion f(w);
  RayCache cache(f, chart);
  // The O(h) remainder is harmonic and averages out over the circle.
  constexpr int kSamples = 64;
  std::vector<double> offset(n, 0.0);
  for (int j = 0; j < kSamples; ++j) {
    const double theta = kTwoPi * j / kSamples;
    const std::vector<double> fv = cache.at(theta, reference);
    const std::vector<double> f0 = raw.at_local(std::polar(reference, theta));
    for (size_t d = 0; d < n; ++d) offset[d] += (fv[d] - f0[d]) / kSamples;
  }
  return AsymptoticModel(chart, std::move(c2), std::move(c1), std::move(offset), reference);
}

double log_abs_f(RayCache& cache, double theta, double s) {
  return std::log(norm(cache.at(theta, std::exp(s))));
}

// Solves |f(h = r e^{i theta})| = R in log r.
double solve_radius(RayCache& cache, const EndAnalysis& e, double theta, double R, double s_min) {
  const double s_max = std::log(cache.chart().radius);
  const double s_est = std::log(2.0 * e.a / ((e.k - 1) * R)) / (e.k - 1);
  const double step = std::log(8.0);
  const double target = std::log(R);
  auto g = [&](double s) { return log_abs_f(cache, theta, s) - target; };

  double lo = std::clamp(s_est - step, s_min, s_max);
  double hi = std::clamp(s_est + step, s_min, s_max);
  double g_lo = g(lo);
  double g_hi = g(hi);
  for (int i = 0; i < 12 && g_lo <= 0.0 && lo > s_min; ++i) {
    hi = lo;
    g_hi = g_lo;
    lo = std::max(s_min, lo - step);
    g_lo = g(lo);
  }
  for (int i = 0; i < 12 && g_hi >= 0.0 && hi < s_max; ++i) {
    lo = hi;
    g_lo = g_hi;
    hi = std::min(s_max, hi + step);
    g_hi = g(hi);
  }
  if (!(g_lo > 0.0 && g_hi < 0.0)) {
    std::ostringstream os;
    os << "no radius with |f| = " << R << " at theta = " << theta << " on the end at " << e.puncture.to_string();
    throw NumericInstability(os.str());
  }
  std::uintmax_t iterations = 100;
  const auto bracket = boost::math::tools::toms748_solve(g, lo, hi, g_lo, g_hi,
                                                         boost::math::tools::eps_tolerance<double>(45), iterations);
  return std::exp(0.5 * (bracket.first + bracket.second));
}

std::vector<double> section_point(RayCache& cache, const EndAnalysis& e, double theta, double R, double s_min,
                                  double* r_out) {
  const double r = solve_radius(cache, e, theta, R, s_min);
  std::vector<double> v = cache.at(theta, r);
  const double len = norm(v);
  for (double& x : v) x /= len;
  if (r_out) *r_out = r;
  return v;
}

double min_log_radius(const WeierstrassData& w, const EndChart& chart) {
  const double s = w.tolerances().singular();
  if (chart.at_infinity) return std::log(1e3 * s);
  return std::log(1e3 * s * (1.0 + std::abs(chart.center)));
}

std::array<std::vector<double>, 2> fit_plane(const std::vector<std::vector<double>>& points) {
  const Eigen::Index rows = static_cast<Eigen::Index>(points.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(points.front().size());
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = points[i][j];
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinV);
  std::array<std::vector<double>, 2> out;
  for (int k = 0; k < 2; ++k) {
    out[k].resize(cols);
    for (Eigen::Index j = 0; j < cols; ++j) out[k][j] = svd.matrixV()(j, k);
  }
  return out;
}

double winding_at(RayCache& cache, const EndAnalysis& e, double R, double s_min) {
  constexpr int kSamples = 720;
  std::map<double, std::vector<double>> curve;
  for (int j = 0; j < kSamples; ++j) {
    const double theta = kTwoPi * j / kSamples;
    curve.emplace(theta, section_point(cache, e, theta, R, s_min, nullptr));
  }

  std::array<std::vector<double>, 2> plane;
  if (e.mu == -2) {
    plane = {e.frame[0], e.frame[1]};
  } else {
    std::vector<std::vector<double>> pts;
    for (const auto& [t, p] : curve) pts.push_back(p);
    plane = fit_plane(pts);
  }
  auto angle = [&](const std::vector<double>& p) { return std::atan2(dot(p, plane[1]), dot(p, plane[0])); };

  for (int pass = 0; pass < 8; ++pass) {
    std::vector<double> inserts;
    for (auto it = curve.begin(); it != curve.end(); ++it) {
      auto next = std::next(it);
      const bool wraps = next == curve.end();
      if (wraps) next = curve.begin();
      if (std::abs(wrap_angle(angle(next->second) - angle(it->second))) > std::numbers::pi / 4) {
        const double t1 = wraps ? next->first + kTwoPi : next->first;
        inserts.push_back(std::fmod(0.5 * (it->first + t1), kTwoPi));
      }
    }
    if (inserts.empty()) break;
    for (double t : inserts) curve.emplace(t, section_point(cache, e, t, R, s_min, nullptr));
  }

  double total = 0.0;
  for (auto it = curve.begin(); it != curve.end(); ++it) {
    auto next = std::next(it);
    if (next == curve.end()) next = curve.begin();
    total += wrap_angle(angle(next->second) - angle(it->second));
  }
  return total / kTwoPi;
}

}  // namespace

std::string to_string(EndType t) {
  switch (t) {
    case EndType::CatenoidType:
      return "CatenoidType";
    case EndType::Planar:
      return "Planar";
    case EndType::HigherOrder:
      return "HigherOrder";
  }
  return "?";
}

EndAnalysis analyze_end(const WeierstrassData& w, const SpherePoint& p) {
  const MetricOrder order = metric_order_at(w, p);
  if (!order.is_end) throw InvalidDatum(p.to_string() + " is not a puncture of " + w.label());
  if (order.mu > -2) {
    throw InvalidDatum("end at " + p.to_string() + " has order " + std::to_string(order.mu) + " and is not complete");
  }

  EndAnalysis e;
  e.puncture = p;
  e.mu = order.mu;
  e.k = -order.mu;
  const Tolerances& tol = w.tolerances();
  for (const RationalMap& r : w.phi()) {
    if (r.is_zero()) {
      e.a_minus2.push_back(0.0);
      e.a_minus1.push_back(0.0);
      e.leading.push_back(0.0);
      continue;
    }
    const LaurentSeries s = form_expand_through(r, p, -1, tol);
    e.a_minus2.push_back(s.coefficient(-2));
    e.a_minus1.push_back(s.coefficient(-1).real());
    e.leading.push_back(s.coefficient(-e.k));
  }

  if (e.mu == -2) {
    std::vector<Complex> residue(e.a_minus1.begin(), e.a_minus1.end());
    const double scale = norm(e.a_minus2);
    const double r22 = std::abs(bilinear(e.a_minus2, e.a_minus2));
    const double r21 = std::abs(bilinear(e.a_minus2, residue));
    if (r22 > tol.relation() * scale * scale || r21 > tol.relation() * scale * (scale + norm(e.a_minus1))) {
      std::ostringstream os;
      os << "bilinear relations fail at " << p.to_string() << ": <a,a> = " << r22 << ", <a,res> = " << r21;
      throw ConsistencyError(os.str());
    }
  }

  const size_t n = e.leading.size();
  std::vector<double> re(n), im(n);
  for (size_t i = 0; i < n; ++i) {
    re[i] = e.leading[i].real();
    im[i] = e.leading[i].imag();
  }
  e.a = norm(re);
  for (size_t i = 0; i < n; ++i) {
    re[i] /= e.a;
    im[i] /= e.a;
  }
  e.frame[0] = std::move(re);
  e.frame[1] = std::move(im);
  e.b = norm(e.a_minus1);

  if (e.mu == -2 && e.b > tol.planar() * e.a) {
    e.classification = EndType::CatenoidType;
    e.frame[2] = e.a_minus1;
    for (double& x : e.frame[2]) x /= e.b;
  } else {
    e.classification = e.mu == -2 ? EndType::Planar : EndType::HigherOrder;
    e.frame[2] = complete_frame(e.frame[0], e.frame[1]);
  }
  e.rotation_index = std::abs(e.k - 1);
  e.embedded = e.k == 2;
  return e;
}

std::vector<EndAnalysis> analyze_ends(const WeierstrassData& w) {
  std::vector<EndAnalysis> out;
  for (const SpherePoint& p : w.punctures()) out.push_back(analyze_end(w, p));
  return out;
}

EndChart end_chart(const WeierstrassData& w, const SpherePoint& p) {
  EndChart c;
  const std::vector<Complex> finite = w.finite_punctures();
  if (p.is_infinite()) {
    double reach = 1.0;
    for (Complex q : finite) reach = std::max(reach, std::abs(q));
    c.at_infinity = true;
    c.radius = 0.5 / reach;
    return c;
  }
  c.center = p.value();
  double sep = 1.0;
  for (Complex q : finite) {
    const double d = std::abs(q - c.center);
    if (d > 0.0) sep = std::min(sep, d);
  }
  c.radius = 0.5 * sep;
  return c;
}

AsymptoticModel::AsymptoticModel(EndChart chart, std::vector<Complex> c2, std::vector<double> c1,
                                 std::vector<double> offset, double reference)
    : chart_(chart), c2_(std::move(c2)), c1_(std::move(c1)), offset_(std::move(offset)), reference_(reference) {}

std::vector<double> AsymptoticModel::at_local(Complex h) const {
  std::vector<double> out(c2_.size());
  const double log_r = std::log(std::abs(h));
  for (size_t d = 0; d < out.size(); ++d) out[d] = 2.0 * (-c2_[d] / h).real() + 2.0 * c1_[d] * log_r + offset_[d];
  return out;
}

AsymptoticModel asymptotic_model(const WeierstrassData& w, const EndAnalysis& e) {
  if (e.classification == EndType::HigherOrder) {
    throw ModelUndefined("end at " + e.puncture.to_string() + " has order " + std::to_string(e.mu) +
                         "; asymptotic to neither a catenoid nor a plane");
  }
  std::vector<double> c1 = e.a_minus1;
  if (e.classification == EndType::Planar) std::fill(c1.begin(), c1.end(), 0.0);
  return matched_model(w, end_chart(w, e.puncture), e.a_minus2, std::move(c1));
}

AsymptoticModel forced_model(const WeierstrassData& w, const EndAnalysis& e) {
  return matched_model(w, end_chart(w, e.puncture), e.a_minus2, e.a_minus1);
}

AsymptoticCheck verify_asymptotic(const WeierstrassData& w, const AsymptoticModel& model,
                                  std::span<const double> radii, int samples) {
  const EndChart& chart = model.chart();
  for (double r : radii) {
    if (!(r > 0.0 && r < chart.radius)) {
      throw DegenerateInput("radius " + std::to_string(r) + " outside the end chart");
    }
  }
  Immersion f(w);
  RayCache cache(f, chart);
  AsymptoticCheck out;
  for (double r : radii) {
    double residual = 0.0;
    double magnitude = 0.0;
    for (int j = 0; j < samples; ++j) {
      const double theta = kTwoPi * j / samples;
      const std::vector<double> fv = cache.at(theta, r);
      const std::vector<double> f0 = model.at_local(std::polar(r, theta));
      double diff = 0.0;
      for (size_t d = 0; d < fv.size(); ++d) diff += (fv[d] - f0[d]) * (fv[d] - f0[d]);
      residual = std::max(residual, std::sqrt(diff));
      magnitude = std::max(magnitude, norm(fv));
    }
    out.radii.push_back(r);
    out.residuals.push_back(residual);
    out.magnitudes.push_back(magnitude);
    out.ratios.push_back(residual / r);
  }

  std::vector<double> effective;
  for (size_t i = 0; i < out.ratios.size(); ++i) {
    effective.push_back(out.residuals[i] <= 1e-9 * out.magnitudes[i] ? 0.0 : out.ratios[i]);
  }
  const size_t first = effective.size() > 3 ? effective.size() - 3 : 0;
  out.bounded = true;
  for (size_t i = first + 1; i < effective.size(); ++i) {
    if (effective[i] > 2.0 * effective[i - 1]) out.bounded = false;
  }
  return out;
}

int rotation_index_numeric(const WeierstrassData& w, const SpherePoint& p, std::span<const double> R_list) {
  return rotation_index_numeric(w, analyze_end(w, p), R_list);
}

int rotation_index_numeric(const WeierstrassData& w, const EndAnalysis& e, std::span<const double> R_list) {
  if (R_list.empty()) throw DegenerateInput("no radii for the rotation index");
  const EndChart chart = end_chart(w, e.puncture);
  Immersion f(w);
  RayCache cache(f, chart);
  const double s_min = min_log_radius(w, chart);

  int index = 0;
  std::ostringstream trace;
  for (size_t i = 0; i < R_list.size(); ++i) {
    const double winding = winding_at(cache, e, R_list[i], s_min);
    trace << " R=" << R_list[i] << ":" << winding;
    const long rounded = std::lround(winding);
    if (std::abs(winding - static_cast<double>(rounded)) > 0.25) {
      throw NumericInstability("non-integral winding at " + e.puncture.to_string() + trace.str());
    }
    const int current = static_cast<int>(std::abs(rounded));
    if (i > 0 && current != index) {
      throw NumericInstability("winding varies with R at " + e.puncture.to_string() + trace.str());
    }
    index = current;
  }
  return index;
}

std::vector<double> limit_circle_deviations(const WeierstrassData& w, const EndAnalysis& e,
                                            std::span<const double> R_list) {
  constexpr int kSamples = 720;
  const EndChart chart = end_chart(w, e.puncture);
  Immersion f(w);
  RayCache cache(f, chart);
  const double s_min = min_log_radius(w, chart);
  std::vector<double> out;
  for (double R : R_list) {
    double worst = 0.0;
    for (int j = 0; j < kSamples; ++j) {
      const double theta = kTwoPi * j / kSamples;
      const std::vector<double> p = section_point(cache, e, theta, R, s_min, nullptr);
      const double c = std::cos((e.k - 1) * theta);
      const double s = std::sin((e.k - 1) * theta);
      double dist = 0.0;
      for (size_t d = 0; d < p.size(); ++d) {
        const double model = -(e.frame[0][d] * c + e.frame[1][d] * s);
        dist += (p[d] - model) * (p[d] - model);
      }
      worst = std::max(worst, std::sqrt(dist));
    }
    out.push_back(worst);
  }
  return out;
}

double limit_circle_deviation(const WeierstrassData& w, const SpherePoint& p, double R) {
  const double R_list[1] = {R};
  return limit_circle_deviations(w, analyze_end(w, p), R_list).front();
}

bool decreasing_to_floor(std::span<const double> values, double floor) {
  for (size_t i = 1; i < values.size(); ++i) {
    if (values[i] <= floor) continue;
    if (!(values[i] < values[i - 1])) return false;
  }
  return true;
}

}  // namespace minsurf
