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

#include "zetacorr/dips.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <ostream>

#include "zetacorr/error.hpp"

namespace zetacorr {
namespace {

constexpr double kPi = std::numbers::pi;

std::size_t GridCount(double t_lo, double t_hi, double step) {
  return static_cast<std::size_t>(std::floor((t_hi - t_lo) / step + 1e-9)) + 1;
}

ComplexVal InversePower(ComplexVal z, int m) {
  ComplexVal p = z;
  for (int i = 1; i < m; ++i) p *= z;
  return 1.0 / p;
}

// Minimizes f on [lo, hi] to width tol; returns (t, f(t)).
std::pair<double, double> GoldenSection(const std::function<double(double)>& f,
                                        double lo, double hi, double tol) {
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

}  // namespace

std::vector<DipRecord> ScanMinima(const CoefficientTuple& a, double t_lo,
                                  double t_hi, double step,
                                  const MangoldtTable& table,
                                  const SeriesConfig& cfg) {
  if (!(step > 0.0) || step > kMaxScanStep) {
    throw InvalidArgument("scan_minima: step must lie in (0, 0.05]");
  }
  if (!(t_lo <= t_hi)) throw InvalidArgument("scan_minima: need t_lo <= t_hi");
  std::vector<DipRecord> records;
  if (t_lo == t_hi) return records;

  const auto series = PreparedSeries::MangoldtPower(
      table, a.m(), static_cast<double>(a.S()), cfg);
  const std::size_t count = GridCount(t_lo, t_hi, step);
  const auto half = series.RealPartGrid(t_lo, step, count);
  const double predicted = DipDepthPrediction(a.m(), a.S());
  const auto y = [&series](double t) { return 2.0 * series.RealPartAt(t); };

  for (std::size_t i = 1; i + 1 < count; ++i) {
    if (!(half[i] < half[i - 1] && half[i] < half[i + 1])) continue;
    const double t_grid = t_lo + static_cast<double>(i) * step;
    const double y_grid = y(t_grid);
    auto [t_min, y_min] =
        GoldenSection(y, t_grid - step, t_grid + step, kRefineTolerance);
    if (y_grid < y_min) {
      t_min = t_grid;
      y_min = y_grid;
    }
    records.push_back({.t_min = t_min,
                       .y_min = y_min,
                       .matched_gamma = std::nullopt,
                       .distance = 0.0,
                       .predicted_depth = predicted});
  }
  return records;
}

std::vector<DipRecord> MatchToZeros(std::vector<DipRecord> records,
                                    const ZeroTable& zeros, double window) {
  if (!(window >= 0.0)) throw InvalidArgument("match_to_zeros: window must be >= 0");
  const auto gammas = zeros.ordinates();
  for (auto& record : records) {
    record.matched_gamma.reset();
    record.distance = 0.0;
    const auto it = std::lower_bound(gammas.begin(), gammas.end(), record.t_min);
    double best = 0.0;
    double best_distance = std::numeric_limits<double>::infinity();
    if (it != gammas.end()) {
      best = *it;
      best_distance = std::abs(*it - record.t_min);
    }
    if (it != gammas.begin() && std::abs(*(it - 1) - record.t_min) < best_distance) {
      best = *(it - 1);
      best_distance = std::abs(best - record.t_min);
    }
    if (best_distance < window) {
      record.matched_gamma = best;
      record.distance = best_distance;
    }
  }
  return records;
}

HeuristicValue HeuristicK(ComplexVal s, int m, int M, const ZeroTable& zeros,
                          int trivial_cutoff) {
  if (m < 2) {
    throw DomainError("heuristic_K: m = 1 leaves the constant of the expansion free");
  }
  if (s.real() < 2.0) throw DomainError("heuristic_K: need Re(s) >= 2");
  if (M < 2) throw InvalidArgument("heuristic_K: need M >= 2");
  if (trivial_cutoff < 0) throw InvalidArgument("heuristic_K: trivial_cutoff < 0");
  if (zeros.empty()) throw InvalidArgument("heuristic_K: zero table is empty");

  const MobiusTable mobius = SieveMobius(static_cast<std::uint64_t>(M));
  double factorial = 1.0;
  for (int i = 2; i < m; ++i) factorial *= i;
  const double top = zeros.max_ordinate();
  const double t_abs = std::abs(s.imag());

  HeuristicValue out;
  ComplexVal total = 0.0;
  for (int delta = 1; delta <= M; ++delta) {
    const double b = BCoefficient(static_cast<std::uint64_t>(delta), m, mobius).get_d();
    if (b == 0.0) continue;
    const double d = static_cast<double>(delta);
    ComplexVal bracket = InversePower(s - 1.0 / d, m);
    ComplexVal rho_sum = 0.0;
    for (double gamma : zeros.ordinates()) {
      rho_sum += InversePower(s - ComplexVal(0.5, gamma) / d, m) +
                 InversePower(s - ComplexVal(0.5, -gamma) / d, m);
    }
    for (int k = 1; k <= trivial_cutoff; ++k) {
      rho_sum += InversePower(s + 2.0 * k / d, m);
    }
    bracket -= rho_sum;
    const double weight = factorial * b / std::pow(d, m);
    total += weight * bracket;

    double nontrivial = std::numeric_limits<double>::infinity();
    const double u = top / d - t_abs;
    if (u > 1.0) {
      const double log_height = std::max(std::log(top / (2.0 * kPi)), 1.0);
      nontrivial = 2.0 * (d / (2.0 * kPi) * std::pow(u, 1 - m) *
                              (log_height / (m - 1) + 1.0 / ((m - 1) * (m - 1))) +
                          2.0 * (std::log(top) + 5.0) * std::pow(u, -m));
    }
    const double trivial =
        trivial_cutoff > 0
            ? std::pow(d / 2.0, m) * std::pow(trivial_cutoff, 1 - m) / (m - 1)
            : std::numeric_limits<double>::infinity();
    out.rho_tail += std::abs(weight) * (nontrivial + trivial);
  }
  out.value = total;
  out.delta_tail = std::pow(M, m - 1) * std::pow(2.0, -M * s.real());
  return out;
}

void CurveTable::WriteCsv(std::ostream& out) const {
  char buffer[64];
  for (std::size_t c = 0; c < headers.size(); ++c) {
    out << (c ? "," : "") << headers[c];
  }
  out << '\n';
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::snprintf(buffer, sizeof buffer, "%.17g", t[i]);
    out << buffer;
    for (const auto& column : columns) {
      std::snprintf(buffer, sizeof buffer, "%.17g", column[i]);
      out << ',' << buffer;
    }
    out << '\n';
  }
}

std::vector<CoefficientTuple> DefaultFigureTuples() {
  return {CoefficientTuple::Make({1, 1, -2}), CoefficientTuple::Make({1, 1, -1, -1}),
          CoefficientTuple::Make({1, 2, -3})};
}

std::string CurveName(const CoefficientTuple& a) {
  std::string name = "y";
  for (auto v : a.values()) name += "_" + std::to_string(v);
  return name;
}

CurveTable Figure1Data(const std::vector<CoefficientTuple>& tuples, double t_lo,
                       double t_hi, double step, const MangoldtTable& table,
                       const SeriesConfig& cfg) {
  if (tuples.empty()) throw InvalidArgument("figure data: no tuples given");
  if (!(step > 0.0)) throw InvalidArgument("figure data: step must be positive");
  if (!(t_lo <= t_hi)) throw InvalidArgument("figure data: need t_lo <= t_hi");
  CurveTable curves;
  const std::size_t count = GridCount(t_lo, t_hi, step);
  curves.headers.push_back("t");
  for (std::size_t i = 0; i < count; ++i) {
    curves.t.push_back(t_lo + static_cast<double>(i) * step);
  }
  for (const auto& a : tuples) {
    const auto series = PreparedSeries::MangoldtPower(
        table, a.m(), static_cast<double>(a.S()), cfg);
    auto column = series.RealPartGrid(t_lo, step, count);
    for (double& v : column) v *= 2.0;
    curves.headers.push_back(CurveName(a));
    curves.columns.push_back(std::move(column));
  }
  return curves;
}

std::uint64_t RequiredSieveLimit(const std::vector<CoefficientTuple>& tuples,
                                 const SeriesConfig& cfg) {
  std::uint64_t limit = 2;
  for (const auto& a : tuples) {
    limit = std::max(limit, CertifiedTruncation(static_cast<double>(a.S()), a.m(),
                                                cfg.tolerance));
  }
  return limit;
}

}  // namespace zetacorr
