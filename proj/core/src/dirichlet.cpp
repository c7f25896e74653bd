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

#include "zetacorr/dirichlet.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "zetacorr/error.hpp"
#include "zetacorr/summation.hpp"

namespace zetacorr {
namespace {

constexpr std::size_t kChunkTerms = 1u << 16;
// Phase rotation drifts by ~1 ulp per step; reseeding bounds the drift.
constexpr std::size_t kReseedInterval = 32;

void CheckHalfPlane(ComplexVal s, const SeriesConfig& cfg, const char* what) {
  if (!(s.real() >= 1.0 + cfg.margin) || !std::isfinite(s.imag())) {
    throw DomainError(std::string(what) + ": need Re(s) >= " +
                      std::to_string(1.0 + cfg.margin) + ", got " +
                      std::to_string(s.real()));
  }
}

double Factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

void SeriesConfig::Validate() const {
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
    throw InvalidArgument("series config: tolerance must be positive");
  }
  if (max_terms < 2) throw InvalidArgument("series config: max_terms must be >= 2");
  if (!(margin > 0.0)) throw InvalidArgument("series config: margin must be positive");
}

double TruncationTailBound(double sigma, int m, double n_max) {
  const double a = sigma - 1.0;
  const double z = a * std::log(n_max);
  // Γ(m+1, z) = m! e^{−z} Σ_{j≤m} z^j / j!
  double term = 1.0;
  double partial = 1.0;
  for (int j = 1; j <= m; ++j) {
    term *= z / j;
    partial += term;
  }
  return Factorial(m) * std::exp(-z) * partial / std::pow(a, m + 1);
}

std::uint64_t CertifiedTruncation(double sigma, int m, double tolerance) {
  if (!(sigma > 1.0)) throw DomainError("certified truncation: need sigma > 1");
  if (m < 0) throw InvalidArgument("certified truncation: need m >= 0");
  const double monotone_from = std::ceil(std::exp(m / sigma));
  std::uint64_t lo = static_cast<std::uint64_t>(std::max(2.0, monotone_from));
  if (TruncationTailBound(sigma, m, static_cast<double>(lo)) <= tolerance) {
    return lo;
  }
  constexpr std::uint64_t kCeiling = 1'000'000'000'000'000'000ull;
  std::uint64_t hi = lo;
  while (TruncationTailBound(sigma, m, static_cast<double>(hi)) > tolerance) {
    if (hi >= kCeiling) return kCeiling;
    lo = hi;
    hi = std::min(kCeiling, hi * 2);
  }
  // bound(lo) > tolerance >= bound(hi)
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (TruncationTailBound(sigma, m, static_cast<double>(mid)) <= tolerance) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

PreparedSeries PreparedSeries::Build(const MangoldtTable& table, int m,
                                     double sigma, const SeriesConfig& cfg,
                                     bool log_weighted) {
  cfg.Validate();
  const char* name = log_weighted ? "G_m" : "K_m";
  if (m < 1 || (!log_weighted && m < 2)) {
    throw InvalidArgument(std::string(name) + ": m out of range (" +
                          std::to_string(m) + ")");
  }
  CheckHalfPlane({sigma, 0.0}, cfg, name);

  const std::uint64_t n_max = CertifiedTruncation(sigma, m, cfg.tolerance);
  if (n_max > cfg.max_terms || n_max > table.limit()) {
    throw ResourceError(
        std::string(name) + ": tolerance " + std::to_string(cfg.tolerance) +
            " at sigma=" + std::to_string(sigma) + " needs sieve limit " +
            std::to_string(n_max) + " (table limit " +
            std::to_string(table.limit()) + ", max_terms " +
            std::to_string(cfg.max_terms) + ")",
        static_cast<double>(n_max));
  }

  PreparedSeries series;
  series.sigma_ = sigma;
  series.terms_ = n_max;
  series.tail_bound_ = TruncationTailBound(sigma, m, static_cast<double>(n_max));
  series.threads_ = cfg.threads;

  const auto powers = table.PrimePowersUpTo(n_max);
  series.log_n_.reserve(powers.size());
  series.weight_.reserve(powers.size());
  for (const PrimePower& pp : powers) {
    const double log_p = std::log(static_cast<double>(pp.p));
    const double log_n = pp.k * log_p;
    const double coefficient = log_weighted
                                   ? log_p * std::pow(log_n, m - 1)
                                   : std::pow(log_p, m);
    series.log_n_.push_back(log_n);
    series.weight_.push_back(coefficient * std::exp(-sigma * log_n));
  }
  return series;
}

PreparedSeries PreparedSeries::MangoldtPower(const MangoldtTable& table, int m,
                                             double sigma,
                                             const SeriesConfig& cfg) {
  return Build(table, m, sigma, cfg, /*log_weighted=*/false);
}

PreparedSeries PreparedSeries::LogWeighted(const MangoldtTable& table, int m,
                                           double sigma,
                                           const SeriesConfig& cfg) {
  return Build(table, m, sigma, cfg, /*log_weighted=*/true);
}

ComplexVal PreparedSeries::At(double t) const {
  const auto partials = MapChunks<CompensatedComplexSum>(
      log_n_.size(), kChunkTerms, threads_,
      [&](std::size_t begin, std::size_t end) {
        CompensatedComplexSum acc;
        for (std::size_t i = begin; i < end; ++i) {
          const double phase = t * log_n_[i];
          acc.Add(weight_[i] * std::cos(phase), -weight_[i] * std::sin(phase));
        }
        return acc;
      });
  CompensatedComplexSum total;
  for (const auto& p : partials) total.Merge(p);
  return total.value();
}

double PreparedSeries::RealPartAt(double t) const {
  const auto partials = MapChunks<CompensatedSum>(
      log_n_.size(), kChunkTerms, threads_,
      [&](std::size_t begin, std::size_t end) {
        CompensatedSum acc;
        for (std::size_t i = begin; i < end; ++i) {
          acc.Add(weight_[i] * std::cos(t * log_n_[i]));
        }
        return acc;
      });
  CompensatedSum total;
  for (const auto& p : partials) total.Merge(p);
  return total.value();
}

std::vector<double> PreparedSeries::RealPartGrid(double t0, double step,
                                                 std::size_t count) const {
  using Partial = std::vector<CompensatedSum>;
  const auto partials = MapChunks<Partial>(
      log_n_.size(), kChunkTerms, threads_,
      [&](std::size_t begin, std::size_t end) {
        Partial acc(count);
        for (std::size_t i = begin; i < end; ++i) {
          const double log_n = log_n_[i];
          const double w = weight_[i];
          const double rot_re = std::cos(step * log_n);
          const double rot_im = -std::sin(step * log_n);
          double z_re = 0.0;
          double z_im = 0.0;
          for (std::size_t j = 0; j < count; ++j) {
            if (j % kReseedInterval == 0) {
              const double phase = (t0 + static_cast<double>(j) * step) * log_n;
              z_re = w * std::cos(phase);
              z_im = -w * std::sin(phase);
            }
            acc[j].Add(z_re);
            const double next_re = z_re * rot_re - z_im * rot_im;
            z_im = z_re * rot_im + z_im * rot_re;
            z_re = next_re;
          }
        }
        return acc;
      });
  std::vector<double> out(count);
  for (std::size_t j = 0; j < count; ++j) {
    CompensatedSum total;
    for (const auto& p : partials) total.Merge(p[j]);
    out[j] = total.value();
  }
  return out;
}

double PreparedSeries::AbsoluteSum() const {
  CompensatedSum acc;
  for (double w : weight_) acc.Add(std::abs(w));
  return acc.value();
}

SeriesValue KM(ComplexVal s, int m, const MangoldtTable& table,
               const SeriesConfig& cfg) {
  CheckHalfPlane(s, cfg, "K_m");
  const auto series = PreparedSeries::MangoldtPower(table, m, s.real(), cfg);
  return {series.At(s.imag()), series.terms(), series.tail_bound()};
}

SeriesValue GM(ComplexVal s, int m, const MangoldtTable& table,
               const SeriesConfig& cfg) {
  CheckHalfPlane(s, cfg, "G_m");
  const auto series = PreparedSeries::LogWeighted(table, m, s.real(), cfg);
  return {series.At(s.imag()), series.terms(), series.tail_bound()};
}

double YOfT(double t, const CoefficientTuple& a, const MangoldtTable& table,
            const SeriesConfig& cfg) {
  const auto series = PreparedSeries::MangoldtPower(
      table, a.m(), static_cast<double>(a.S()), cfg);
  return 2.0 * series.RealPartAt(t);
}

double KIdentityResidual(ComplexVal s, int m, int delta_max,
                         const MangoldtTable& table, const SeriesConfig& cfg) {
  if (s.real() < 2.0) throw DomainError("k_identity_residual: need Re(s) >= 2");
  if (delta_max < 2) throw InvalidArgument("k_identity_residual: need delta_max >= 2");
  const MobiusTable mobius = SieveMobius(static_cast<std::uint64_t>(delta_max));
  const ComplexVal k_value = KM(s, m, table, cfg).value;
  CompensatedComplexSum expansion;
  for (int delta = 1; delta <= delta_max; ++delta) {
    const BigInt b = BCoefficient(static_cast<std::uint64_t>(delta), m, mobius);
    if (b == 0) continue;
    // |b| grows like δ^{m−1}; split the tolerance so the δ ≥ 2 terms add at
    // most cfg.tolerance in total. These have Re ≥ 2σ and stay cheap.
    SeriesConfig term_cfg = cfg;
    if (delta > 1) {
      term_cfg.tolerance = cfg.tolerance / (std::abs(b.get_d()) * (delta_max - 1));
    }
    const ComplexVal g = GM(static_cast<double>(delta) * s, m, table, term_cfg).value;
    expansion.Add(b.get_d() * g);
  }
  return std::abs(k_value - expansion.value());
}

}  // namespace zetacorr
