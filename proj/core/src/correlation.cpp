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

#include "zetacorr/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "zetacorr/combinatorics.hpp"
#include "zetacorr/error.hpp"
#include "zetacorr/quadrature.hpp"
#include "zetacorr/summation.hpp"

namespace zetacorr {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::size_t kPrefixChunk = 1 << 14;
constexpr std::size_t kGridChunk = 256;

std::span<const double> CoveredZeros(const ZeroTable& zeros, double T) {
  if (!(T > 0.0) || !std::isfinite(T)) {
    throw InvalidArgument("correlation sum: need finite T > 0");
  }
  if (T > zeros.max_ordinate()) {
    throw DataError("zero table ends at " + std::to_string(zeros.max_ordinate()) +
                    ", below T = " + std::to_string(T));
  }
  return ZerosUpTo(zeros, T);
}

double IntPow(double base, int exponent) {
  double result = 1.0;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

struct DirectPartial {
  CompensatedSum sum;
  std::uint64_t hits = 0;
  double abs_sum = 0.0;
};

}  // namespace

HEstimate DirectH(const TestFunction& h, const CoefficientTuple& a, double T,
                  const ZeroTable& zeros, const DirectOptions& options) {
  const auto gammas = CoveredZeros(zeros, T);
  const int m = a.m();
  const std::size_t n = gammas.size();
  HEstimate out;
  if (n == 0) return out;

  const double prefix_count = IntPow(static_cast<double>(n), m - 1);
  if (prefix_count > static_cast<double>(options.max_prefixes)) {
    throw BudgetError("direct route needs " + std::to_string(prefix_count) +
                      " prefixes (budget " + std::to_string(options.max_prefixes) +
                      "); use the spectral route for this T");
  }
  const double cutoff = options.cutoff > 0.0 ? options.cutoff : h.Cutoff();
  if (std::isnan(cutoff)) throw InvalidArgument("direct route: cutoff is NaN");
  const bool prune = std::isfinite(cutoff);

  const auto coeff = a.values();
  const double last = static_cast<double>(coeff[m - 1]);
  const double slack = 4.0 * m * kEps * (static_cast<double>(a.two_r()) * T + cutoff);

  const auto partials = MapChunks<DirectPartial>(
      static_cast<std::size_t>(prefix_count), kPrefixChunk, options.threads,
      [&](std::size_t begin, std::size_t end) {
        DirectPartial part;
        std::vector<std::size_t> index(m - 1);
        std::size_t rest = begin;
        for (int k = m - 2; k >= 0; --k) {
          index[k] = rest % n;
          rest /= n;
        }
        for (std::size_t p = begin; p < end; ++p) {
          double prefix = static_cast<double>(coeff[0]) * gammas[index[0]];
          for (int k = 1; k < m - 1; ++k) {
            prefix += static_cast<double>(coeff[k]) * gammas[index[k]];
          }
          auto first = gammas.begin();
          auto stop = gammas.end();
          if (prune) {
            double lo = (-cutoff - prefix) / last;
            double hi = (cutoff - prefix) / last;
            if (lo > hi) std::swap(lo, hi);
            first = std::lower_bound(gammas.begin(), gammas.end(), lo - slack);
            stop = std::upper_bound(first, gammas.end(), hi + slack);
          }
          for (auto it = first; it != stop; ++it) {
            const double value = h.Value(prefix + last * *it);
            part.sum.Add(value);
            part.abs_sum += std::abs(value);
          }
          part.hits += static_cast<std::uint64_t>(stop - first);
          for (int k = m - 2; k >= 0; --k) {
            if (++index[k] < n) break;
            index[k] = 0;
          }
        }
        return part;
      });

  double abs_sum = 0.0;
  if (partials.size() == 1) {
    out.value = partials.front().sum.value();
    out.tuple_count = partials.front().hits;
    abs_sum = partials.front().abs_sum;
  } else {
    CompensatedSum total;
    for (const auto& part : partials) {
      total.Merge(part.sum);
      out.tuple_count += part.hits;
      abs_sum += part.abs_sum;
    }
    out.value = total.value();
  }

  const double all = prefix_count * static_cast<double>(n);
  const double skipped = all - static_cast<double>(out.tuple_count);
  out.pruned_fraction = skipped / all;
  const double pruning_error = prune ? skipped * h.EnvelopeBeyond(cutoff) : 0.0;
  // Δ carries about m rounding errors of size ε·Σ|a_kγ_k|; h adds a few ε.
  const double delta_error = m * kEps * static_cast<double>(a.two_r()) * T;
  const double per_term =
      h.LipschitzBound() * delta_error + 16.0 * kEps * std::abs(h.amplitude());
  const double rounding = static_cast<double>(out.tuple_count) * per_term +
                          4.0 * kEps * abs_sum;
  out.claimed_error = pruning_error + rounding;
  return out;
}

ComplexVal ZeroExponentialSum(std::span<const double> gammas, double xi) {
  double re = 0.0;
  double im = 0.0;
  const double omega = 2.0 * kPi * xi;
  for (double gamma : gammas) {
    const double phase = omega * gamma;
    re += std::cos(phase);
    im += std::sin(phase);
  }
  return {re, im};
}

namespace {

struct SpectralPartial {
  CompensatedSum sum;
  double abs_weight = 0.0;  // Σ w_j |ĥ(ξ_j)|
  double weight = 0.0;      // Σ w_j
};

// Σ_{k≥1} sup_{|x| ≥ k/η − D} |h(x)|, the aliasing bound for one Δ on one side.
double AliasingSum(const TestFunction& h, double eta, double delta_max) {
  double total = 0.0;
  for (int k = 1; k <= 100000; ++k) {
    const double term = h.EnvelopeBeyond(k / eta - delta_max);
    total += term;
    if (term <= 1e-300 || term <= 1e-17 * total) break;
  }
  return total;
}

double TruncationBound(const TestFunction& h, double xi_max, double eta,
                       double tuples) {
  return 2.0 * tuples * (h.FourierAbsTail(xi_max) + eta * h.FourierEnvelope(xi_max));
}

}  // namespace

HEstimate SpectralH(const TestFunction& h, const CoefficientTuple& a, double T,
                    const ZeroTable& zeros, const SpectralOptions& options) {
  if (!(options.tolerance > 0.0)) {
    throw InvalidArgument("spectral route: tolerance must be positive");
  }
  if (options.xi_max < 0.0 || !std::isfinite(options.xi_max)) {
    throw InvalidArgument("spectral route: xi_max must be positive");
  }
  if (options.grid == 1) throw InvalidArgument("spectral route: grid must be ≥ 2");
  const auto gammas = CoveredZeros(zeros, T);
  const int m = a.m();
  const double n = static_cast<double>(gammas.size());
  HEstimate out;
  if (gammas.empty()) return out;

  const double tuples = IntPow(n, m);
  const double max_abs = static_cast<double>(a.max_abs());
  const double delta_max = static_cast<double>(a.S()) * T;
  const double default_eta =
      std::min(1.0 / (8.0 * max_abs * T), 1.0 / (2.0 * (delta_max + h.Cutoff())));

  double xi_max = options.xi_max;
  if (xi_max == 0.0) {
    double lo = 0.0;
    double hi = 1.0 / h.s();
    while (TruncationBound(h, hi, default_eta, tuples) > options.tolerance / 2) {
      lo = hi;
      hi *= 2.0;
    }
    for (int i = 0; i < 60; ++i) {
      const double mid = 0.5 * (lo + hi);
      (TruncationBound(h, mid, default_eta, tuples) > options.tolerance / 2 ? lo : hi) =
          mid;
    }
    xi_max = hi;
  }
  std::uint64_t grid = options.grid;
  if (grid == 0) {
    grid = static_cast<std::uint64_t>(std::ceil(xi_max / default_eta));
    grid = std::max<std::uint64_t>(grid, 2);
  }
  const double eta = xi_max / static_cast<double>(grid);
  out.grid = grid;
  out.xi_max = xi_max;

  std::vector<std::int64_t> magnitudes;
  for (auto v : a.values()) magnitudes.push_back(std::abs(v));
  std::sort(magnitudes.begin(), magnitudes.end());
  magnitudes.erase(std::unique(magnitudes.begin(), magnitudes.end()), magnitudes.end());
  std::vector<std::size_t> slot;
  for (auto v : a.values()) {
    slot.push_back(static_cast<std::size_t>(
        std::lower_bound(magnitudes.begin(), magnitudes.end(), std::abs(v)) -
        magnitudes.begin()));
  }

  const auto partials = MapChunks<SpectralPartial>(
      static_cast<std::size_t>(grid + 1), kGridChunk, options.threads,
      [&](std::size_t begin, std::size_t end) {
        SpectralPartial part;
        std::vector<ComplexVal> q(magnitudes.size());
        for (std::size_t j = begin; j < end; ++j) {
          const double xi = static_cast<double>(j) * eta;
          const double w = (j == 0 || j == grid) ? 0.5 : 1.0;
          for (std::size_t i = 0; i < magnitudes.size(); ++i) {
            q[i] = ZeroExponentialSum(gammas, static_cast<double>(magnitudes[i]) * xi);
          }
          ComplexVal product = 1.0;
          for (int k = 0; k < m; ++k) {
            const ComplexVal factor = q[slot[k]];
            product *= a.values()[k] > 0 ? factor : std::conj(factor);
          }
          const double hat = h.Fourier(xi);
          part.sum.Add(w * hat * product.real());
          part.abs_weight += w * std::abs(hat);
          part.weight += w;
        }
        return part;
      });

  CompensatedSum total;
  double abs_weight = 0.0;
  double weight = 0.0;
  for (const auto& part : partials) {
    total.Merge(part.sum);
    abs_weight += part.abs_weight;
    weight += part.weight;
  }
  out.value = 2.0 * eta * total.value();

  const double aliasing = tuples * 2.0 * AliasingSum(h, eta, delta_max);
  const double truncation = TruncationBound(h, xi_max, eta, tuples);
  // Each Q carries N phase errors of size ε·2πξ|a|T plus the plain summation.
  const double q_error = n * kEps * (n + 3.0 + 2.0 * kPi * xi_max * max_abs * T);
  const double product_error =
      m * IntPow(n, m - 1) * q_error + 2.0 * m * kEps * tuples;
  const double hat_error = 8.0 * std::abs(h.amplitude()) * h.s() * kEps * tuples;
  const double rounding =
      2.0 * eta * (abs_weight * product_error + weight * hat_error) +
      4.0 * kEps * std::abs(out.value);
  out.claimed_error = aliasing + truncation + rounding;
  if (aliasing + truncation > options.tolerance) {
    out.warnings.push_back("accuracy-warning: aliasing " + std::to_string(aliasing) +
                           " + truncation " + std::to_string(truncation) +
                           " exceed tolerance; refine the grid or raise xi_max");
  }
  return out;
}

double MainTermParts::Value(double T, int m) const {
  return d_value * IntPow(T, m - 1) * integral;
}

double MainTermParts::Error(double T, int m) const {
  const double scale = IntPow(T, m - 1);
  const double d_error = c_error / IntPow(2.0 * kPi, m);
  return scale * (std::abs(d_value) * integral_error + d_error * std::abs(integral)) +
         4.0 * kEps * std::abs(Value(T, m));
}

MainTermParts ComputeMainTermParts(const TestFunction& h,
                                   const CoefficientTuple& a,
                                   const MangoldtTable& table,
                                   const MainTermConfig& cfg) {
  if (a.S() < 2) throw DomainError("main term: needs S ≥ 2");
  MainTermParts parts;
  const int m = a.m();
  if (a.IsBalanced()) {
    parts.c_value = CExactBalanced(static_cast<int>(a.S())).ToDouble();
    parts.c_error = kEps * parts.c_value;
    parts.c_exact = true;
  } else {
    const auto c = CConstant(a, cfg.c_tolerance);
    parts.c_value = c.value;
    parts.c_error = c.TotalError();
  }
  parts.d_value = (m % 2 == 0 ? 1.0 : -1.0) * parts.c_value / IntPow(2.0 * kPi, m);
  const auto integral = WeightedYIntegral(h, a, table, cfg.series, cfg.integral_tolerance);
  parts.integral = integral.value;
  parts.integral_error = integral.TotalError();
  return parts;
}

double MainTerm(const TestFunction& h, const CoefficientTuple& a, double T,
                const MangoldtTable& table, const MainTermConfig& cfg) {
  return ComputeMainTermParts(h, a, table, cfg).Value(T, a.m());
}

double CorrelationReport::ScaledDirect() const {
  return H_direct / IntPow(T, tuple.m() - 1);
}

double CorrelationReport::ScaledMainTerm() const {
  return main_term / IntPow(T, tuple.m() - 1);
}

bool CorrelationReport::RoutesAgree() const {
  return std::abs(H_direct - H_spectral) <= error_direct + error_spectral;
}

CorrelationReport BuildReport(const TestFunction& h, const CoefficientTuple& a,
                              double T, const ZeroTable& zeros,
                              const MainTermParts& main,
                              const ReportOptions& options) {
  const auto direct = DirectH(h, a, T, zeros, options.direct);
  const auto spectral = SpectralH(h, a, T, zeros, options.spectral);
  CorrelationReport report{
      .H_direct = direct.value,
      .H_spectral = spectral.value,
      .main_term = main.Value(T, a.m()),
      .T = T,
      .tuple = a,
      .h_params = h,
      .zero_count = ZerosUpTo(zeros, T).size(),
      .tuple_count = direct.tuple_count,
      .pruned_fraction = direct.pruned_fraction,
      .spectral_grid = spectral.grid,
      .xi_max = spectral.xi_max,
      .error_direct = direct.claimed_error,
      .error_spectral = spectral.claimed_error,
      .error_main_term = main.Error(T, a.m()),
      .warnings = {},
  };
  report.warnings = direct.warnings;
  report.warnings.insert(report.warnings.end(), spectral.warnings.begin(),
                         spectral.warnings.end());
  return report;
}

}  // namespace zetacorr
