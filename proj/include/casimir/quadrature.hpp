#pragma once

// Globally adaptive Gauss-Kronrod (G7/K15) quadrature on a finite interval.
//
// The interval is first cut at caller-supplied breakpoints; the panel with
// the largest error estimate is bisected until the summed error satisfies
// max(abs_tol, rel_tol * |I|) or the panel budget runs out. The result is
// summed in left-to-right panel order so repeated runs are bit-identical.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <span>
#include <type_traits>
#include <vector>

namespace casimir::quadrature {

struct Options {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  // Also accept errors below this fraction of the integral of |f|; useful
  // when f changes sign and |I| is much smaller than the integral of |f|.
  double rel_tol_of_abs = 0.0;
  std::size_t max_panels = 10000;
};

/// Integrand value with an auxiliary channel integrated on the same panels
/// (e.g. an error density) without steering the refinement.
struct Sample {
  double value = 0.0;
  double aux = 0.0;
};

struct Result {
  double value = 0.0;
  double abs_error = 0.0;
  double abs_integral = 0.0;  // estimate of the integral of |f|
  double aux = 0.0;           // integral of the auxiliary channel
  std::size_t panels = 0;
  std::size_t evaluations = 0;
  bool converged = false;
};

namespace detail {

// Kronrod abscissae (descending) and weights; Gauss weights for the embedded
// 7-point rule sit at the odd Kronrod positions.
inline constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value, error, abs_value, aux;
};

template <class F>
Sample sample(F& f, double x) {
  if constexpr (std::is_convertible_v<std::invoke_result_t<F&, double>, double>) {
    return {static_cast<double>(f(x)), 0.0};
  } else {
    return f(x);
  }
}

template <class F>
Panel gk15(F& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const Sample sc = sample(f, centre);
  const double fc = sc.value;
  double resk = fc * wgk[7];
  double resg = fc * wg[3];
  double resabs = std::abs(resk);
  double aux = sc.aux * wgk[7];
  std::array<double, 7> f1{}, f2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * xgk[j];
    const Sample lo = sample(f, centre - dx);
    const Sample hi = sample(f, centre + dx);
    f1[j] = lo.value;
    f2[j] = hi.value;
    aux += wgk[j] * (lo.aux + hi.aux);
    const double sum = f1[j] + f2[j];
    resk += wgk[j] * sum;
    resabs += wgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) resg += wg[j / 2] * sum;
  }
  const double mean = 0.5 * resk;
  double resasc = wgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j)
    resasc += wgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

  const double scale = std::abs(half);
  resk *= half;
  resg *= half;
  aux *= half;
  resabs *= scale;
  resasc *= scale;
  double err = std::abs(resk - resg);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps))
    err = std::max(50.0 * eps * resabs, err);
  return {a, b, resk, err, resabs, aux};
}

}  // namespace detail

/// Integrates f over [a, b], splitting first at every breakpoint strictly
/// inside (a, b). Breakpoints need not be sorted.
template <class F>
Result integrate(F&& f, double a, double b, std::span<const double> breakpoints = {},
                 const Options& opt = {}) {
  using detail::Panel;
  std::vector<double> cuts{a};
  for (double x : breakpoints)
    if (x > a && x < b) cuts.push_back(x);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  auto by_error = [](const Panel& l, const Panel& r) {
    if (l.error != r.error) return l.error < r.error;
    return l.a > r.a;
  };
  std::priority_queue<Panel, std::vector<Panel>, decltype(by_error)> heap(by_error);
  std::vector<Panel> settled;  // panels too narrow to split further

  Result res;
  double total = 0.0, total_err = 0.0, total_abs = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Panel p = detail::gk15(f, cuts[i], cuts[i + 1]);
    res.evaluations += 15;
    total += p.value;
    total_err += p.error;
    total_abs += p.abs_value;
    heap.push(p);
  }

  auto target = [&] {
    return std::max({opt.abs_tol, opt.rel_tol * std::abs(total), opt.rel_tol_of_abs * total_abs});
  };
  while (!heap.empty() && total_err > target() &&
         heap.size() + settled.size() < opt.max_panels) {
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b) ||
        std::abs(worst.b - worst.a) <
            1e3 * std::numeric_limits<double>::epsilon() *
                std::max(std::abs(worst.a), std::abs(worst.b))) {
      settled.push_back(worst);
      continue;
    }
    Panel left = detail::gk15(f, worst.a, mid);
    Panel right = detail::gk15(f, mid, worst.b);
    res.evaluations += 30;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    total_abs += left.abs_value + right.abs_value - worst.abs_value;
    heap.push(left);
    heap.push(right);
  }

  std::vector<Panel> all = std::move(settled);
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
  res.value = 0.0;
  res.abs_error = 0.0;
  for (const Panel& p : all) {
    res.value += p.value;
    res.abs_error += p.error;
    res.abs_integral += p.abs_value;
    res.aux += p.aux;
  }
  res.panels = all.size();
  res.converged = res.abs_error <= std::max({opt.abs_tol, opt.rel_tol * std::abs(res.value),
                                             opt.rel_tol_of_abs * res.abs_integral});
  return res;
}

template <class F>
Result integrate(F&& f, double a, double b, const Options& opt) {
  return integrate(std::forward<F>(f), a, b, std::span<const double>{}, opt);
}

}  // namespace casimir::quadrature
