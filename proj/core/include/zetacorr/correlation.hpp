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

#ifndef ZETACORR_CORRELATION_HPP_
#define ZETACORR_CORRELATION_HPP_

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "zetacorr/arithmetic.hpp"
#include "zetacorr/coefficient_tuple.hpp"
#include "zetacorr/dirichlet.hpp"
#include "zetacorr/test_function.hpp"
#include "zetacorr/zeros.hpp"

namespace zetacorr {

/// A correlation sum together with what it cost and how far off it may be.
struct HEstimate {
  double value = 0.0;
  /// Bound on truncation/pruning plus an estimate of accumulated rounding.
  double claimed_error = 0.0;
  /// Direct route: tuples whose h(Δ) was evaluated. Spectral route: 0.
  std::uint64_t tuple_count = 0;
  /// Direct route: fraction of the N^m tuples skipped by pruning.
  double pruned_fraction = 0.0;
  /// Spectral route: number of ξ-grid intervals.
  std::uint64_t grid = 0;
  double xi_max = 0.0;
  std::vector<std::string> warnings;
};

struct DirectOptions {
  /// |Δ| window kept by pruning; 0 means h.Cutoff(), +inf disables pruning.
  double cutoff = 0.0;
  /// Budget on the number of (m−1)-prefixes enumerated.
  std::uint64_t max_prefixes = 50'000'000;
  unsigned threads = 1;
};

/// Σ h(a_1γ_1 + ⋯ + a_mγ_m) over all m-tuples of ordinates in (0, T].
/// Throws DataError when T exceeds the table and BudgetError when the
/// prefix count exceeds the budget.
HEstimate DirectH(const TestFunction& h, const CoefficientTuple& a, double T,
                  const ZeroTable& zeros, const DirectOptions& options = {});

struct SpectralOptions {
  /// Upper end of the ξ range; 0 picks it from the decay of ĥ.
  double xi_max = 0.0;
  /// Number of grid intervals on [0, xi_max]; 0 picks the default spacing.
  std::uint64_t grid = 0;
  /// Target for the truncation and aliasing bounds.
  double tolerance = 1e-9;
  unsigned threads = 1;
};

/// The same sum as DirectH, evaluated as 2 Re ∫_0^Ξ ĥ(ξ) ∏_k Q(a_k ξ) dξ
/// with Q(ξ) = Σ_{γ≤T} e^{2πiξγ}, by the trapezoid rule on a uniform grid.
/// The rule's error is exactly the aliasing sum Σ_Δ Σ_{k≠0} h(Δ + k/η),
/// which is bounded with the envelope of h. A grid too coarse for the
/// tolerance adds an "accuracy-warning" entry.
HEstimate SpectralH(const TestFunction& h, const CoefficientTuple& a, double T,
                    const ZeroTable& zeros, const SpectralOptions& options = {});

/// Q(ξ) = Σ_{0<γ≤T} e^{2πiξγ}.
ComplexVal ZeroExponentialSum(std::span<const double> gammas, double xi);

struct MainTermConfig {
  SeriesConfig series{.tolerance = 1e-2};
  double integral_tolerance = 1e-4;
  double c_tolerance = 1e-10;
};

/// The T-independent pieces of D(m) T^{m−1} ∫ h y.
struct MainTermParts {
  double c_value = 0.0;
  double c_error = 0.0;
  bool c_exact = false;
  double d_value = 0.0;
  double integral = 0.0;
  double integral_error = 0.0;

  double Value(double T, int m) const;
  double Error(double T, int m) const;
};

/// C(m; a) comes from the exact formula for ±1 tuples and from quadrature
/// otherwise. Throws DomainError when S < 2.
MainTermParts ComputeMainTermParts(const TestFunction& h,
                                   const CoefficientTuple& a,
                                   const MangoldtTable& table,
                                   const MainTermConfig& cfg);

double MainTerm(const TestFunction& h, const CoefficientTuple& a, double T,
                const MangoldtTable& table, const MainTermConfig& cfg);

struct CorrelationReport {
  double H_direct = 0.0;
  double H_spectral = 0.0;
  double main_term = 0.0;
  double T = 0.0;
  CoefficientTuple tuple;
  TestFunction h_params;
  std::uint64_t zero_count = 0;
  std::uint64_t tuple_count = 0;
  double pruned_fraction = 0.0;
  std::uint64_t spectral_grid = 0;
  double xi_max = 0.0;
  double error_direct = 0.0;
  double error_spectral = 0.0;
  double error_main_term = 0.0;
  std::vector<std::string> warnings;

  double ScaledDirect() const;
  double ScaledMainTerm() const;
  bool RoutesAgree() const;

  friend bool operator==(const CorrelationReport&, const CorrelationReport&) = default;
};

struct ReportOptions {
  DirectOptions direct;
  SpectralOptions spectral;
};

/// Both routes plus a precomputed main term.
CorrelationReport BuildReport(const TestFunction& h, const CoefficientTuple& a,
                              double T, const ZeroTable& zeros,
                              const MainTermParts& main,
                              const ReportOptions& options = {});

}  // namespace zetacorr

#endif  // ZETACORR_CORRELATION_HPP_
