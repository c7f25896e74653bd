// Copyright 2026 The zetacorr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zetacorr/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

#include "zetacorr/summation.hpp"

namespace zetacorr {
namespace {

// 15-point Kronrod abscissae (descending, last is the centre) and weights,
// with the embedded 7-point Gauss weights for xgk[1], xgk[3], xgk[5], xgk[7].
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo;
  double hi;
  double value;
  double error;

  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel Kronrod15(const std::function<double(double)>& f, double lo, double hi) {
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  std::array<double, 7> f1{};
  std::array<double, 7> f2{};
  const double fc = f(centre);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double abs_sum = std::abs(kronrod);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[static_cast<std::size_t>(j)];
    const double a = f(centre - dx);
    const double b = f(centre + dx);
    f1[static_cast<std::size_t>(j)] = a;
    f2[static_cast<std::size_t>(j)] = b;
    kronrod += kWgk[static_cast<std::size_t>(j)] * (a + b);
    abs_sum += kWgk[static_cast<std::size_t>(j)] * (std::abs(a) + std::abs(b));
    if (j % 2 == 1) gauss += kWg[static_cast<std::size_t>(j / 2)] * (a + b);
  }
  const double mean = 0.5 * kronrod;
  double asc = kWgk[7] * std::abs(fc - mean);
  for (std::size_t j = 0; j < 7; ++j) {
    asc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
  }

  const double result = kronrod * half;
  const double resabs = abs_sum * std::abs(half);
  const double resasc = asc * std::abs(half);
  double err = std::abs((kronrod - gauss) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
    err = std::max(50.0 * kEps * resabs, err);
  }
  return {lo, hi, result, err};
}

QuadratureResult Summarize(const std::priority_queue<Panel>& heap,
                           std::size_t evaluations) {
  auto copy = heap;
  std::vector<Panel> panels;
  panels.reserve(copy.size());
  while (!copy.empty()) {
    panels.push_back(copy.top());
    copy.pop();
  }
  // Sum left to right so the value does not depend on heap internals.
  std::sort(panels.begin(), panels.end(),
            [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
  CompensatedSum value;
  CompensatedSum error;
  for (const Panel& p : panels) {
    value.Add(p.value);
    error.Add(p.error);
  }
  return {value.value(), error.value(), evaluations, 0.0};
}

}  // namespace

QuadratureResult AdaptiveIntegrate(const std::function<double(double)>& f,
                                   double lo, double hi, double tol,
                                   const QuadratureOptions& options) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw InvalidArgument("adaptive_integrate: need finite lo < hi");
  }
  if (!(tol > 0.0)) throw InvalidArgument("adaptive_integrate: tol must be positive");

  const std::size_t panels = std::max<std::size_t>(options.initial_panels, 1);
  std::priority_queue<Panel> heap;
  std::size_t evaluations = 0;
  double total_error = 0.0;
  const double width = (hi - lo) / static_cast<double>(panels);
  for (std::size_t i = 0; i < panels; ++i) {
    const double a = lo + width * static_cast<double>(i);
    const double b = (i + 1 == panels) ? hi : lo + width * static_cast<double>(i + 1);
    Panel p = Kronrod15(f, a, b);
    evaluations += 15;
    total_error += p.error;
    heap.push(p);
  }

  while (total_error > tol) {
    if (evaluations + 30 > options.max_evaluations) {
      const QuadratureResult best = Summarize(heap, evaluations);
      throw QuadratureBudgetExceeded(
          "adaptive_integrate: tolerance " + std::to_string(tol) +
              " not reached in " + std::to_string(evaluations) +
              " evaluations (estimate " + std::to_string(best.error_estimate) + ")",
          best);
    }
    const Panel worst = heap.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(worst.lo < mid && mid < worst.hi)) {
      const QuadratureResult best = Summarize(heap, evaluations);
      throw QuadratureBudgetExceeded(
          "adaptive_integrate: panel width reached machine precision", best);
    }
    heap.pop();
    const Panel left = Kronrod15(f, worst.lo, mid);
    const Panel right = Kronrod15(f, mid, worst.hi);
    evaluations += 30;
    total_error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    if (total_error <= tol) {
      // The running total drifts; confirm with a fresh sum.
      total_error = Summarize(heap, evaluations).error_estimate;
    }
  }
  return Summarize(heap, evaluations);
}

double Sinc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

double SincProduct(std::span<const std::int64_t> a, double w) {
  std::array<std::int64_t, 64> buffer{};
  std::vector<std::int64_t> heap_buffer;
  std::span<std::int64_t> scales;
  if (a.size() <= buffer.size()) {
    scales = std::span<std::int64_t>(buffer.data(), a.size());
  } else {
    heap_buffer.resize(a.size());
    scales = heap_buffer;
  }
  for (std::size_t i = 0; i < a.size(); ++i) scales[i] = std::abs(a[i]);
  std::sort(scales.begin(), scales.end());
  double product = 1.0;
  for (std::int64_t k : scales) product *= Sinc(static_cast<double>(k) * w);
  return product;
}

QuadratureResult CConstant(const CoefficientTuple& a, double tol) {
  const int m = a.m();
  if (m < 3) throw DomainError("C_constant: need m >= 3 for absolute convergence");
  if (!(tol > 0.0)) throw InvalidArgument("C_constant: tol must be positive");

  double inverse_scale = 1.0;
  for (std::int64_t v : a.values()) inverse_scale /= static_cast<double>(std::abs(v));
  const double tail_coefficient =
      (2.0 / std::numbers::pi) * inverse_scale / (m - 1);
  const double cutoff = std::pow(tail_coefficient / (0.5 * tol), 1.0 / (m - 1));

  const std::vector<std::int64_t> values(a.values().begin(), a.values().end());
  auto integrand = [&values](double w) {
    return (2.0 / std::numbers::pi) * SincProduct(values, w);
  };
  QuadratureOptions options;
  options.initial_panels =
      static_cast<std::size_t>(std::clamp(std::ceil(cutoff / 8.0), 1.0, 1e6));
  QuadratureResult result = AdaptiveIntegrate(integrand, 0.0, cutoff, 0.5 * tol, options);
  result.tail_bound = tail_coefficient * std::pow(cutoff, 1 - m);
  return result;
}

QuadratureResult WeightedYIntegral(const TestFunction& h,
                                   const CoefficientTuple& a,
                                   const MangoldtTable& table,
                                   const SeriesConfig& cfg, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("weighted_y_integral: tol must be positive");
  if (a.S() < 2) throw DomainError("weighted_y_integral: need S >= 2");
  const auto series = PreparedSeries::MangoldtPower(
      table, a.m(), static_cast<double>(a.S()), cfg);
  // |y(t)| ≤ 2 K_m(S).
  const double y_bound = 2.0 * (series.AbsoluteSum() + series.tail_bound());

  double window = h.c();
  while (y_bound * h.AbsTailIntegral(window) > 0.5 * tol) window += 0.5 * h.s();

  auto integrand = [&](double t) { return h.Value(t) * 2.0 * series.RealPartAt(t); };
  QuadratureOptions options;
  const double top_frequency = std::log(static_cast<double>(series.terms()));
  options.initial_panels = static_cast<std::size_t>(
      std::max(1.0, std::ceil(window * top_frequency / (2.0 * std::numbers::pi))));
  // h·y is even, so integrate the right half and double.
  QuadratureResult half = AdaptiveIntegrate(integrand, 0.0, window, 0.25 * tol, options);

  const double h_l1 = std::abs(h.amplitude()) * 4.0 * h.s();
  QuadratureResult out;
  out.value = 2.0 * half.value;
  out.error_estimate = 2.0 * half.error_estimate + 2.0 * series.tail_bound() * h_l1;
  out.evaluations = half.evaluations;
  out.tail_bound = y_bound * h.AbsTailIntegral(window);
  return out;
}

}  // namespace zetacorr
