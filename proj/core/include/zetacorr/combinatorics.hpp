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

#ifndef ZETACORR_COMBINATORICS_HPP_
#define ZETACORR_COMBINATORICS_HPP_

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "zetacorr/arithmetic.hpp"
#include "zetacorr/rational.hpp"

namespace zetacorr {

using ComplexVal = std::complex<double>;

/// The subset/sign-sum identities cancel catastrophically, so their numeric
/// residual is only meaningful next to the largest term that was summed.
struct IdentityResidual {
  ComplexVal value;
  double scale = 0.0;  ///< max |intermediate term|

  double Relative() const {
    return scale > 0.0 ? std::abs(value) / scale : std::abs(value);
  }
};

/// Enumeration-based evaluators are restricted to q ≤ this.
inline constexpr int kMaxIdentityArity = 8;

/// top! / (parts[0]! ⋯ parts[n−1]!). Throws InvalidArgument unless the parts
/// sum to top.
BigInt Multinomial(unsigned top, std::span<const unsigned> parts);

/// Alternating subset sum of multinomial-weighted monomials
///   Σ_s (−1)^{s−1} Σ_{|K|=s} Σ_{j_K ≥ 0, Σj = r} (2r; 2j_K) ∏ x_k^{j_k},
/// which vanishes identically for 1 ≤ r < q. Returns the evaluated residual.
IdentityResidual SubsetMultinomialResidual(std::span<const ComplexVal> x, int r);

/// Σ_s 2^{q−s} (−1)^{s−1} Σ_{|K|=s} Σ_{ε_2..ε_s} (α_{k1} + ε_2 α_{k2} + ⋯)^{2r},
/// likewise identically zero for 1 ≤ r < q.
IdentityResidual SubsetSignSumResidual(std::span<const ComplexVal> alpha, int r);

/// Both sides of ∏ 2cosh(A_ℓ) = Σ_{ε_2..ε_s} 2cosh(A_1 + ε_2 A_2 + ⋯ + ε_s A_s).
/// Requires 2 ≤ s ≤ 20 and |A_ℓ| ≤ 30.
std::pair<double, double> CoshProductCheck(std::span<const double> a);

/// Q(n) with ∫_{−∞}^{∞} (sin t / t)^{2n} dt = π·Q(n):
///   Q(n) = n Σ_{k=1}^{n} k^{2n−3} ∏_{ℓ≠k} 1/(k² − ℓ²),
/// computed in exact rationals.
BigRational SincPowerIntegralExact(int n);

/// c(r)·π^{2r} where c(r) = r/(2π)^{2r} Σ_{k≤r} k^{2r−3} ∏_{ℓ≠k} 1/(k² − ℓ²).
BigRational COfR(int r);

/// C(2r; (1,…,1,−1,…,−1)) = (1/π)∫ sinc^{2r} = Q(r), for r ≥ 2.
BigRational CExactBalanced(int r);

/// Predicted y(t; a) near an ordinate: −2(m−1)!/(S − 1/2)^m.
double DipDepthPrediction(int m, std::int64_t positive_sum);

}  // namespace zetacorr

#endif  // ZETACORR_COMBINATORICS_HPP_
