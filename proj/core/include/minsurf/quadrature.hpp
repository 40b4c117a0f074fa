#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <span>
#include <vector>

namespace minsurf {

struct QuadratureResult {
  std::vector<std::complex<double>> value;
  double error = 0.0;
  int intervals = 0;
  bool converged = false;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
inline constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a = 0.0;
  double b = 0.0;
  std::vector<std::complex<double>> value;
  double error = 0.0;
  friend bool operator<(const Panel& x, const Panel& y) { return x.error < y.error; }
};

inline double max_abs(std::span<const std::complex<double>> v) {
  double m = 0.0;
  for (const auto& c : v) m = std::max(m, std::abs(c));
  return m;
}

template <class F>
Panel gk15(F& f, std::size_t dim, double a, double b, std::vector<std::complex<double>>& scratch) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::vector<std::complex<double>> kron(dim, 0.0), gauss(dim, 0.0);
  scratch.assign(dim, 0.0);

  f(center, std::span<std::complex<double>>(scratch));
  for (std::size_t d = 0; d < dim; ++d) {
    kron[d] += kKronrodWeights[7] * scratch[d];
    gauss[d] += kGaussWeights[3] * scratch[d];
  }
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    for (const double x : {center - dx, center + dx}) {
      f(x, std::span<std::complex<double>>(scratch));
      for (std::size_t d = 0; d < dim; ++d) {
        kron[d] += kKronrodWeights[i] * scratch[d];
        if (i % 2 == 1) gauss[d] += kGaussWeights[i / 2] * scratch[d];
      }
    }
  }
  Panel p{a, b, std::move(kron), 0.0};
  double err = 0.0;
  for (std::size_t d = 0; d < dim; ++d) {
    p.value[d] *= half;
    err = std::max(err, std::abs(p.value[d] - half * gauss[d]));
  }
  p.error = err;
  return p;
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod (7/15) quadrature of a vector-valued
// complex integrand over [a, b]. `f(t, out)` writes dim values into out.
// Stops when the summed error estimate is below max(abs_tol, rel_tol*|I|),
// with |I| the max-norm over components.
template <class F>
QuadratureResult integrate_adaptive(F&& f, std::size_t dim, double a, double b, double rel_tol, double abs_tol,
                                    int max_panels = 4000) {
  std::vector<std::complex<double>> scratch;
  std::priority_queue<detail::Panel> heap;
  heap.push(detail::gk15(f, dim, a, b, scratch));

  QuadratureResult out;
  auto totals = [&](std::vector<std::complex<double>>& sum, double& err) {
    sum.assign(dim, 0.0);
    err = 0.0;
    auto copy = heap;
    while (!copy.empty()) {
      const auto& p = copy.top();
      for (std::size_t d = 0; d < dim; ++d) sum[d] += p.value[d];
      err += p.error;
      copy.pop();
    }
  };

  std::vector<std::complex<double>> sum(heap.top().value);
  double err = heap.top().error;
  int panels = 1;
  while (err > std::max(abs_tol, rel_tol * detail::max_abs(sum)) && panels < max_panels) {
    detail::Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      heap.push(std::move(worst));
      break;
    }
    detail::Panel left = detail::gk15(f, dim, worst.a, mid, scratch);
    detail::Panel right = detail::gk15(f, dim, mid, worst.b, scratch);
    for (std::size_t d = 0; d < dim; ++d) sum[d] += left.value[d] + right.value[d] - worst.value[d];
    err += left.error + right.error - worst.error;
    heap.push(std::move(left));
    heap.push(std::move(right));
    ++panels;
  }
  // Re-sum from the panels to shed accumulated cancellation in the running
  // totals.
  totals(sum, err);
  out.value = std::move(sum);
  out.error = err;
  out.intervals = panels;
  out.converged = err <= std::max(abs_tol, rel_tol * detail::max_abs(out.value));
  return out;
}

}  // namespace minsurf
