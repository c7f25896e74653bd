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

#ifndef ZETACORR_QUADRATURE_HPP_
#define ZETACORR_QUADRATURE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

#include "zetacorr/arithmetic.hpp"
#include "zetacorr/coefficient_tuple.hpp"
#include "zetacorr/dirichlet.hpp"
#include "zetacorr/error.hpp"
#include "zetacorr/test_function.hpp"

namespace zetacorr {

struct QuadratureResult {
  double value = 0.0;
  /// Estimated error of the finite-interval quadrature (plus any
  /// integrand-evaluation error the caller folds in).
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  /// Analytic bound on the part of an infinite range that was cut off.
  double tail_bound = 0.0;

  double TotalError() const { return error_estimate + tail_bound; }
};

/// Thrown when the tolerance is not reached within the evaluation budget.
class QuadratureBudgetExceeded : public BudgetError {
 public:
  QuadratureBudgetExceeded(const std::string& what, QuadratureResult best)
      : BudgetError(what), best_(best) {}

  const QuadratureResult& best() const { return best_; }

 private:
  QuadratureResult best_;
};

struct QuadratureOptions {
  std::size_t max_evaluations = 5'000'000;
  /// The range is first split into this many equal panels.
  std::size_t initial_panels = 1;
};

/// Globally adaptive 7/15-point Gauss–Kronrod integration: the panel with the
/// largest error estimate is bisected until the summed estimate is ≤ tol.
/// Throws InvalidArgument for lo ≥ hi or tol ≤ 0, and
/// QuadratureBudgetExceeded when the budget runs out.
QuadratureResult AdaptiveIntegrate(const std::function<double(double)>& f,
                                   double lo, double hi, double tol,
                                   const QuadratureOptions& options = {});

/// sin(x)/x with the removable singularity filled in by its Taylor series.
double Sinc(double x);

/// ∏_k sin(|a_k| w)/(|a_k| w), multiplied in ascending |a_k| so the result
/// depends only on the multiset of |a_k|.
double SincProduct(std::span<const std::int64_t> a, double w);

/// C(m; a) = (1/π) ∫ ∏_k sinc(|a_k| w) dw for m ≥ 3. The range is truncated
/// at W where the analytic tail (2/π) ∏|a_k|^{−1} W^{1−m}/(m−1) equals tol/2;
/// the quadrature gets the other tol/2. Throws DomainError for m < 3.
QuadratureResult CConstant(const CoefficientTuple& a, double tol);

/// ∫ h(t) y(t; a) dt. The window [−T_h, T_h] is chosen so that
/// 2K_m(S) ∫_{|t|>T_h} |h| ≤ tol/2; the series truncation error
/// (2·tail·∫|h|) is added to error_estimate.
QuadratureResult WeightedYIntegral(const TestFunction& h,
                                   const CoefficientTuple& a,
                                   const MangoldtTable& table,
                                   const SeriesConfig& cfg, double tol);

}  // namespace zetacorr

#endif  // ZETACORR_QUADRATURE_HPP_
