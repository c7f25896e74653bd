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

#ifndef ZETACORR_DIRICHLET_HPP_
#define ZETACORR_DIRICHLET_HPP_

#include <cstdint>
#include <vector>

#include "zetacorr/arithmetic.hpp"
#include "zetacorr/coefficient_tuple.hpp"
#include "zetacorr/combinatorics.hpp"

namespace zetacorr {

struct SeriesConfig {
  /// Absolute bound on the discarded tail of every series.
  double tolerance = 1e-10;
  /// Hard cap on the truncation point N.
  std::uint64_t max_terms = kMaxSieveLimit;
  /// Series are only evaluated for Re s ≥ 1 + margin.
  double margin = 0.5;
  /// Worker threads for the prime-power sum; results do not depend on it.
  unsigned threads = 1;

  /// Throws InvalidArgument on nonsensical settings.
  void Validate() const;
};

struct SeriesValue {
  ComplexVal value;
  std::uint64_t terms = 0;  ///< truncation point N (n ≤ N summed)
  double tail_bound = 0.0;  ///< certified bound on |Σ_{n>N}|
};

/// Upper bound for Σ_{n>N} (log n)^m n^{−σ}, i.e. the integral
/// Γ(m+1, (σ−1)log N)/(σ−1)^{m+1}. Valid once (log x)^m x^{−σ} is decreasing
/// on [N, ∞), i.e. N ≥ e^{m/σ}.
double TruncationTailBound(double sigma, int m, double n_max);

/// Smallest N ≥ e^{m/σ} whose tail bound is ≤ tolerance (searched up to
/// 10^18; the result may exceed any sieve cap, callers check).
std::uint64_t CertifiedTruncation(double sigma, int m, double tolerance);

/// Σ_{n≤N} c(n) n^{−σ−it} over prime powers n, for fixed σ and N, with the
/// weights c(n) n^{−σ} and log n precomputed so the series can be evaluated
/// at many t. Summation runs in ascending n within fixed-size chunks whose
/// compensated partials are reduced in chunk order.
class PreparedSeries {
 public:
  /// Coefficients Λ(n)^m: the K_m series.
  static PreparedSeries MangoldtPower(const MangoldtTable& table, int m,
                                      double sigma, const SeriesConfig& cfg);
  /// Coefficients Λ(n)(log n)^{m−1}: the G_m series.
  static PreparedSeries LogWeighted(const MangoldtTable& table, int m,
                                    double sigma, const SeriesConfig& cfg);

  ComplexVal At(double t) const;
  double RealPartAt(double t) const;
  /// Re of the series at t0, t0 + step, …; uses phase rotation between
  /// reseeds, agreeing with RealPartAt to ~1e−13 relative.
  std::vector<double> RealPartGrid(double t0, double step,
                                   std::size_t count) const;

  double sigma() const { return sigma_; }
  std::uint64_t terms() const { return terms_; }
  double tail_bound() const { return tail_bound_; }
  /// Σ |c(n)| n^{−σ} over the retained terms (= value at t = 0).
  double AbsoluteSum() const;

 private:
  PreparedSeries() = default;
  static PreparedSeries Build(const MangoldtTable& table, int m, double sigma,
                              const SeriesConfig& cfg, bool log_weighted);

  double sigma_ = 0.0;
  std::uint64_t terms_ = 0;
  double tail_bound_ = 0.0;
  unsigned threads_ = 1;
  std::vector<double> log_n_;
  std::vector<double> weight_;
};

/// K_m(s) = Σ Λ(n)^m n^{−s}. Throws DomainError when Re s < 1 + margin and
/// ResourceError when the certified N exceeds the table or max_terms.
SeriesValue KM(ComplexVal s, int m, const MangoldtTable& table,
               const SeriesConfig& cfg);

/// G_m(s) = Σ Λ(n)(log n)^{m−1} n^{−s} = (−1)^m (ζ'/ζ)^{(m−1)}(s).
SeriesValue GM(ComplexVal s, int m, const MangoldtTable& table,
               const SeriesConfig& cfg);

/// y(t; a) = K_m(S+it) + K_m(S−it) = 2 Re K_m(S+it).
double YOfT(double t, const CoefficientTuple& a, const MangoldtTable& table,
            const SeriesConfig& cfg);

/// |K_m(s) − Σ_{δ≤delta_max} b_m(δ) G_m(δs)|. Needs Re s ≥ 2 and
/// delta_max ≥ 2. The δ ≥ 2 terms share cfg.tolerance between them.
double KIdentityResidual(ComplexVal s, int m, int delta_max,
                         const MangoldtTable& table, const SeriesConfig& cfg);

}  // namespace zetacorr

#endif  // ZETACORR_DIRICHLET_HPP_
