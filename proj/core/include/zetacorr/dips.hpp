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

#ifndef ZETACORR_DIPS_HPP_
#define ZETACORR_DIPS_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zetacorr/arithmetic.hpp"
#include "zetacorr/coefficient_tuple.hpp"
#include "zetacorr/combinatorics.hpp"
#include "zetacorr/dirichlet.hpp"
#include "zetacorr/zeros.hpp"

namespace zetacorr {

/// A local minimum of y(t; a).
struct DipRecord {
  double t_min = 0.0;
  double y_min = 0.0;
  std::optional<double> matched_gamma;
  double distance = 0.0;
  double predicted_depth = 0.0;

  friend bool operator==(const DipRecord&, const DipRecord&) = default;
};

inline constexpr double kMaxScanStep = 0.05;
inline constexpr double kRefineTolerance = 1e-4;

/// Samples y on t_lo, t_lo + step, … ≤ t_hi, keeps strict local minima of
/// the samples and refines each by golden-section search on its bracketing
/// cells. Records come back sorted by t. Throws InvalidArgument for
/// t_lo > t_hi or step outside (0, 0.05].
std::vector<DipRecord> ScanMinima(const CoefficientTuple& a, double t_lo,
                                  double t_hi, double step,
                                  const MangoldtTable& table,
                                  const SeriesConfig& cfg);

/// Matches each record to the nearest ordinate strictly closer than window.
/// Throws InvalidArgument for a negative window.
std::vector<DipRecord> MatchToZeros(std::vector<DipRecord> records,
                                    const ZeroTable& zeros, double window);

struct HeuristicValue {
  ComplexVal value;
  /// Crude bound on the omitted zeros: nontrivial ones above the table and
  /// trivial ones beyond the cutoff.
  double rho_tail = 0.0;
  /// M^{m−1} 2^{−Mσ}, the order of the omitted δ > M terms (its constant is
  /// not explicit).
  double delta_tail = 0.0;
};

/// (m−1)! Σ_{δ≤M} b_m(δ)/δ^m [(s − 1/δ)^{−m} − Σ_ρ (s − ρ/δ)^{−m}] with ρ over
/// ½ ± iγ for the tabulated γ and −2k for k ≤ trivial_cutoff.
/// Throws DomainError for m < 2 or Re s < 2, InvalidArgument for M < 2 or an
/// empty table.
HeuristicValue HeuristicK(ComplexVal s, int m, int M, const ZeroTable& zeros,
                          int trivial_cutoff = 50);

/// y(t; a) for several tuples on a common grid.
struct CurveTable {
  std::vector<std::string> headers;  ///< "t", then one per tuple
  std::vector<double> t;
  std::vector<std::vector<double>> columns;

  void WriteCsv(std::ostream& out) const;
};

/// The tuples plotted in the reference figure.
std::vector<CoefficientTuple> DefaultFigureTuples();

/// Column name for a tuple, e.g. "y_1_1_-2".
std::string CurveName(const CoefficientTuple& a);

/// Grid t_lo + i·step ≤ t_hi (a single row when t_lo == t_hi). Throws
/// InvalidArgument for an empty tuple list, step ≤ 0 or t_lo > t_hi.
CurveTable Figure1Data(const std::vector<CoefficientTuple>& tuples, double t_lo,
                       double t_hi, double step, const MangoldtTable& table,
                       const SeriesConfig& cfg);

/// Sieve limit needed to evaluate y(t; a) for every tuple at cfg.tolerance.
std::uint64_t RequiredSieveLimit(const std::vector<CoefficientTuple>& tuples,
                                 const SeriesConfig& cfg);

}  // namespace zetacorr

#endif  // ZETACORR_DIPS_HPP_
