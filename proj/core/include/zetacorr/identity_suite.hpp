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

#ifndef ZETACORR_IDENTITY_SUITE_HPP_
#define ZETACORR_IDENTITY_SUITE_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace zetacorr {

struct IdentitySuiteOptions {
  std::uint64_t seed = 42;
  /// Random inputs per (identity, q, r) case.
  int iterations = 100;
  int max_q = 6;
  int cosh_max_s = 6;
  std::uint64_t b_max_k = 10'000;
  int b_max_m = 6;
};

struct IdentityCheck {
  std::string name;
  std::uint64_t cases = 0;
  double max_residual = 0.0;
  double threshold = 0.0;

  bool Passes() const { return max_residual <= threshold; }
};

struct IdentitySuiteReport {
  std::uint64_t seed = 0;
  std::vector<IdentityCheck> checks;

  bool AllPass() const;
};

/// Randomized checks of the subset, sign-sum and cosh-product identities plus
/// the exact Dirichlet-inverse identity Σ_{dδ=k} d^{m−1} b_m(δ) = 1. The same
/// seed gives the same inputs. Residuals are scale-relative.
IdentitySuiteReport RunIdentitySuite(const IdentitySuiteOptions& options);

}  // namespace zetacorr

#endif  // ZETACORR_IDENTITY_SUITE_HPP_
