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

#include "zetacorr/identity_suite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "zetacorr/arithmetic.hpp"
#include "zetacorr/combinatorics.hpp"
#include "zetacorr/error.hpp"

namespace zetacorr {
namespace {

constexpr double kSubsetThreshold = 1e-9;
constexpr double kCoshThreshold = 1e-12;

ComplexVal RandomInDisk(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> radius(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  return std::polar(std::sqrt(radius(rng)), angle(rng));
}

IdentityCheck SubsetIdentity(const std::string& name, bool sign_form,
                             const IdentitySuiteOptions& options,
                             std::mt19937_64& rng) {
  IdentityCheck check{.name = name, .threshold = kSubsetThreshold};
  for (int q = 2; q <= options.max_q; ++q) {
    for (int r = 1; r < q; ++r) {
      for (int it = 0; it < options.iterations; ++it) {
        std::vector<ComplexVal> x(q);
        for (auto& v : x) v = RandomInDisk(rng);
        const auto residual = sign_form ? SubsetSignSumResidual(x, r) : SubsetMultinomialResidual(x, r);
        check.max_residual = std::max(check.max_residual, residual.Relative());
        ++check.cases;
      }
    }
  }
  return check;
}

IdentityCheck CoshIdentity(const IdentitySuiteOptions& options, std::mt19937_64& rng) {
  IdentityCheck check{.name = "cosh_product", .threshold = kCoshThreshold};
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  for (int s = 2; s <= options.cosh_max_s; ++s) {
    for (int it = 0; it < options.iterations; ++it) {
      std::vector<double> a(s);
      for (auto& v : a) v = dist(rng);
      const auto [lhs, rhs] = CoshProductCheck(a);
      check.max_residual = std::max(check.max_residual, std::abs(lhs - rhs) / std::abs(lhs));
      ++check.cases;
    }
  }
  return check;
}

// Largest |Σ_{dδ=k} d^{m−1} b_m(δ) − 1|, computed in integers.
IdentityCheck InverseIdentity(const IdentitySuiteOptions& options) {
  IdentityCheck check{.name = "b_inverse", .threshold = 0.0};
  const MobiusTable mobius = SieveMobius(options.b_max_k);
  for (int m = 1; m <= options.b_max_m; ++m) {
    std::vector<BigInt> b(options.b_max_k + 1);
    for (std::uint64_t d = 1; d <= options.b_max_k; ++d) b[d] = BCoefficient(d, m, mobius);
    std::vector<BigInt> total(options.b_max_k + 1, BigInt(0));
    BigInt power;
    for (std::uint64_t d = 1; d <= options.b_max_k; ++d) {
      mpz_ui_pow_ui(power.get_mpz_t(), d, static_cast<unsigned long>(m - 1));
      for (std::uint64_t delta = 1; d * delta <= options.b_max_k; ++delta) {
        total[d * delta] += power * b[delta];
      }
    }
    for (std::uint64_t k = 1; k <= options.b_max_k; ++k) {
      const BigInt diff = abs(total[k] - 1);
      check.max_residual = std::max(check.max_residual, diff.get_d());
      ++check.cases;
    }
  }
  return check;
}

}  // namespace

bool IdentitySuiteReport::AllPass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.Passes(); });
}

IdentitySuiteReport RunIdentitySuite(const IdentitySuiteOptions& options) {
  if (options.iterations < 1) throw InvalidArgument("identities: iterations must be >= 1");
  if (options.max_q < 2 || options.max_q > kMaxIdentityArity) {
    throw InvalidArgument("identities: max_q must lie in [2, 8]");
  }
  if (options.cosh_max_s < 2 || options.cosh_max_s > 20) {
    throw InvalidArgument("identities: cosh_max_s must lie in [2, 20]");
  }
  if (options.b_max_k < 1 || options.b_max_m < 1) {
    throw InvalidArgument("identities: b_max_k and b_max_m must be >= 1");
  }
  std::mt19937_64 rng(options.seed);
  IdentitySuiteReport report;
  report.seed = options.seed;
  report.checks.push_back(SubsetIdentity("subset_multinomial", false, options, rng));
  report.checks.push_back(SubsetIdentity("subset_sign_sum", true, options, rng));
  report.checks.push_back(CoshIdentity(options, rng));
  report.checks.push_back(InverseIdentity(options));
  return report;
}

}  // namespace zetacorr
