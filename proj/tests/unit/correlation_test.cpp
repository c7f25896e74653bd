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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "fixtures.hpp"
#include "zetacorr/coefficient_tuple.hpp"
#include "zetacorr/correlation.hpp"
#include "zetacorr/error.hpp"
#include "zetacorr/test_function.hpp"

namespace zc = zetacorr;
namespace zt = zetacorr::testing;

namespace {

const zc::TestFunction kH = zc::TestFunction::GaussianTriplet(20.0, 2.0);
constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

TEST_SUITE("correlation") {

TEST_CASE("no zeros below the first ordinate") {
  const auto a = zc::CoefficientTuple::Make({1, 1, -2});
  const auto r = zc::DirectH(kH, a, 10.0, zt::StandardZeros());
  CHECK(r.value == 0.0);
  CHECK(r.tuple_count == 0);
  CHECK(zc::SpectralH(kH, a, 10.0, zt::StandardZeros()).value == 0.0);
}

TEST_CASE("unpruned direct sum is bit-identical to nested loops") {
  const auto& zeros = zt::StandardZeros();
  for (auto v : {std::vector<std::int64_t>{1, 1, -2}, {1, 2, -3}, {1, 1, -1, -1}}) {
    const auto a = zc::CoefficientTuple::Make(v);
    for (double T : {30.0, 60.0}) {
      const auto g = zc::ZerosUpTo(zeros, T);
      const auto r = zc::DirectH(kH, a, T, zeros, {.cutoff = kInf});
      CHECK(r.value == zt::NaiveH(kH, a.values(), g));
      CHECK(r.pruned_fraction == 0.0);
    }
  }
}

TEST_CASE("pruning stays within its claimed error") {
  const auto& zeros = zt::StandardZeros();
  const auto a = zc::CoefficientTuple::Make({1, 1, -2});
  const auto naive = zt::NaiveH(kH, a.values(), zc::ZerosUpTo(zeros, 120.0));
  const auto pruned = zc::DirectH(kH, a, 120.0, zeros);
  CHECK(pruned.pruned_fraction > 0.5);
  CHECK(std::abs(pruned.value - naive) <= pruned.claimed_error + 1e-12);
}

TEST_CASE("permutation and negation invariance") {
  const auto& zeros = zt::StandardZeros();
  std::vector<std::int64_t> v = {1, 2, -3};
  const double base = zc::DirectH(kH, zc::CoefficientTuple::Make(v), 80.0, zeros).value;
  const double scale = std::max(1.0, std::abs(base));
  std::sort(v.begin(), v.end());
  do {
    const double permuted = zc::DirectH(kH, zc::CoefficientTuple::Make(v), 80.0, zeros).value;
    CHECK(std::abs(permuted - base) < 1e-9 * scale);
    std::vector<std::int64_t> neg;
    for (auto x : v) neg.push_back(-x);
    const double negated = zc::DirectH(kH, zc::CoefficientTuple::Make(neg), 80.0, zeros).value;
    CHECK(std::abs(negated - base) < 1e-9 * scale);
  } while (std::next_permutation(v.begin(), v.end()));
}

TEST_CASE("linear in the amplitude of h") {
  const auto& zeros = zt::StandardZeros();
  const auto a = zc::CoefficientTuple::Make({1, 1, -1, -1});
  const auto h3 = zc::TestFunction::GaussianTriplet(20.0, 2.0, -3.0);
  const double one = zc::DirectH(kH, a, 70.0, zeros).value;
  const double three = zc::DirectH(h3, a, 70.0, zeros).value;
  CHECK(std::abs(three + 3.0 * one) < 1e-12 * std::max(1.0, std::abs(three)));
}

TEST_CASE("zero exponential sum") {
  const auto g = zc::ZerosUpTo(zt::StandardZeros(), 200.0);
  const auto q0 = zc::ZeroExponentialSum(g, 0.0);
  CHECK(q0.real() == static_cast<double>(g.size()));
  CHECK(q0.imag() == 0.0);
  for (double xi : {0.01, 0.3, 2.7}) {
    const auto plus = zc::ZeroExponentialSum(g, xi);
    const auto minus = zc::ZeroExponentialSum(g, -xi);
    CHECK(std::abs(plus - std::conj(minus)) < 1e-12 * static_cast<double>(g.size()));
    CHECK(std::abs(plus) <= static_cast<double>(g.size()) * (1.0 + 1e-15));
  }
}

TEST_CASE("routes agree on small instances") {
  const auto& zeros = zt::StandardZeros();
  for (auto v : {std::vector<std::int64_t>{1, 1, -2}, {1, 2, -3}, {1, 1, -1, -1}}) {
    const auto a = zc::CoefficientTuple::Make(v);
    for (double T : {40.0, 90.0}) {
      const auto d = zc::DirectH(kH, a, T, zeros);
      const auto s = zc::SpectralH(kH, a, T, zeros);
      CHECK(std::abs(d.value - s.value) <= d.claimed_error + s.claimed_error);
      CHECK(s.warnings.empty());
      CHECK(s.grid > 1);
    }
  }
}

TEST_CASE("a coarse spectral grid is flagged") {
  const auto a = zc::CoefficientTuple::Make({1, 1, -2});
  const auto s = zc::SpectralH(kH, a, 60.0, zt::StandardZeros(), {.xi_max = 0.5, .grid = 8});
  CHECK_FALSE(s.warnings.empty());
  CHECK_THROWS_AS(zc::SpectralH(kH, a, 60.0, zt::StandardZeros(), {.grid = 1}),
                  zc::InvalidArgument);
}

TEST_CASE("thread count does not change results") {
  const auto& zeros = zt::StandardZeros();
  const auto a = zc::CoefficientTuple::Make({1, 1, -1, -1});
  const auto d1 = zc::DirectH(kH, a, 150.0, zeros, {.threads = 1});
  const auto d4 = zc::DirectH(kH, a, 150.0, zeros, {.threads = 4});
  CHECK(d1.value == d4.value);
  const auto s1 = zc::SpectralH(kH, a, 150.0, zeros, {.threads = 1});
  const auto s4 = zc::SpectralH(kH, a, 150.0, zeros, {.threads = 4});
  CHECK(s1.value == s4.value);
}

TEST_CASE("errors") {
  const auto& zeros = zt::StandardZeros();
  const auto a = zc::CoefficientTuple::Make({1, 1, -2});
  CHECK_THROWS_AS(zc::DirectH(kH, a, 5000.0, zeros), zc::DataError);
  CHECK_THROWS_AS(zc::DirectH(kH, a, -1.0, zeros), zc::InvalidArgument);
  CHECK_THROWS_AS(zc::DirectH(kH, a, 300.0, zeros, {.max_prefixes = 100}), zc::BudgetError);
}

TEST_CASE("main term constants") {
  const auto& table = zt::SharedSieve(2'000'000);
  zc::MainTermConfig cfg;
  cfg.series.tolerance = 1e-1;
  const auto balanced = zc::CoefficientTuple::Make({1, 1, -1, -1});
  const auto parts = zc::ComputeMainTermParts(kH, balanced, table, cfg);
  CHECK(parts.c_exact);
  const double pi4 = std::pow(std::numbers::pi, 4);
  CHECK(parts.d_value == doctest::Approx(1.0 / (24.0 * pi4)).epsilon(1e-14));

  const auto skew = zc::CoefficientTuple::Make({1, 1, -2});
  cfg.series.tolerance = 1e-2;
  const auto p3 = zc::ComputeMainTermParts(kH, skew, table, cfg);
  CHECK_FALSE(p3.c_exact);
  CHECK(std::abs(p3.c_value - 0.5) < 1e-9);
  CHECK(p3.d_value < 0.0);
  // ĥ ≤ 0 and y's Dirichlet coefficients are positive.
  CHECK(p3.integral < 0.0);
}

TEST_CASE("main term scales as T^(m-1)") {
  const zc::MainTermParts parts{.c_value = 0.5, .d_value = -0.002, .integral = -3.0};
  for (int m : {3, 4, 5}) {
    for (double T : {100.0, 250.0}) {
      CHECK(parts.Value(2.0 * T, m) == doctest::Approx(std::pow(2.0, m - 1) * parts.Value(T, m)));
    }
  }
}

TEST_CASE("report assembly") {
  const auto& zeros = zt::StandardZeros();
  const auto a = zc::CoefficientTuple::Make({1, 1, -2});
  const zc::MainTermParts parts{.c_value = 0.5, .d_value = -0.002, .integral = -3.0};
  const auto report = zc::BuildReport(kH, a, 100.0, zeros, parts);
  CHECK(report.zero_count == 29);
  CHECK(report.RoutesAgree());
  CHECK(report.ScaledMainTerm() == doctest::Approx(0.006));
  CHECK(report.ScaledDirect() == doctest::Approx(report.H_direct / 1e4));
}

}  // TEST_SUITE
