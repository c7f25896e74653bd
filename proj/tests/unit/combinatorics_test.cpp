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

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "zetacorr/combinatorics.hpp"
#include "zetacorr/error.hpp"
#include "zetacorr/quadrature.hpp"

namespace zc = zetacorr;
using zc::BigRational;
using zc::ComplexVal;

namespace {

std::vector<ComplexVal> RandomDisk(std::mt19937_64& rng, int q) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<ComplexVal> out;
  while (static_cast<int>(out.size()) < q) {
    const ComplexVal z(u(rng), u(rng));
    if (std::abs(z) <= 1.0) out.push_back(z);
  }
  return out;
}

// ∫ sinc^{2n} = 2(∫_0^W + ∫_W^∞). For n ≥ 2 the tail is only bounded by
// ∫ t^{−2n}; for n = 1 it is 1/(2W) − ∫_W^∞ cos(2t)/(2t²) dt, expanded by
// parts twice.
double SincPowerNumeric(int n, double& error) {
  const double W = 1000.0;
  const auto f = [n](double t) { return std::pow(zc::Sinc(t), 2 * n); };
  zc::QuadratureOptions options;
  options.initial_panels = 2000;
  const auto result = zc::AdaptiveIntegrate(f, 0.0, W, 1e-12, options);
  double tail = 0.0;
  double tail_error = std::pow(W, 1 - 2 * n) / (2 * n - 1);
  if (n == 1) {
    tail = 0.5 / W + std::sin(2.0 * W) / (4.0 * W * W) - std::cos(2.0 * W) / (4.0 * W * W * W);
    tail_error = 1.0 / (4.0 * W * W * W);
  }
  error = 2.0 * (result.error_estimate + tail_error);
  return 2.0 * (result.value + tail);
}

}  // namespace

TEST_SUITE("combinatorics") {

TEST_CASE("multinomial") {
  const unsigned a[] = {2, 2};
  const unsigned b[] = {2};
  const unsigned c[] = {2, 2, 2};
  const unsigned d[] = {0, 3, 0};
  CHECK(zc::Multinomial(4, a) == 6);
  CHECK(zc::Multinomial(2, b) == 1);
  CHECK(zc::Multinomial(6, c) == 90);
  CHECK(zc::Multinomial(3, d) == 1);
  CHECK_THROWS_AS(zc::Multinomial(5, a), zc::InvalidArgument);
}

TEST_CASE("multinomials over all compositions sum to a power") {
  // Σ_{j1+j2+j3 = n} n!/(j1! j2! j3!) = 3^n
  for (unsigned n = 0; n <= 12; ++n) {
    zc::BigInt total = 0;
    for (unsigned i = 0; i <= n; ++i) {
      for (unsigned j = 0; i + j <= n; ++j) {
        const unsigned parts[] = {i, j, n - i - j};
        total += zc::Multinomial(n, parts);
      }
    }
    zc::BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), 3, n);
    CHECK(total == power);
  }
}

TEST_CASE("subset identity examples") {
  const ComplexVal ones[] = {1.0, 1.0};
  CHECK(std::abs(zc::SubsetMultinomialResidual(ones, 1).value) == 0.0);
  std::mt19937_64 rng(3);
  auto x3 = RandomDisk(rng, 3);
  CHECK(std::abs(zc::SubsetMultinomialResidual(x3, 2).value) <= 1e-10);
  auto x5 = RandomDisk(rng, 5);
  const auto res = zc::SubsetMultinomialResidual(x5, 3);
  CHECK(res.scale > 0.0);
  CHECK(std::abs(res.value) <= 1e-9 * res.scale);
}

TEST_CASE("sign-sum identity examples") {
  const ComplexVal a(0.3, -0.7);
  const ComplexVal pair[] = {a, a};
  CHECK(std::abs(zc::SubsetSignSumResidual(pair, 1).value) <= 1e-12);
  std::mt19937_64 rng(5);
  auto x3 = RandomDisk(rng, 3);
  const auto r1 = zc::SubsetSignSumResidual(x3, 1);
  CHECK(std::abs(r1.value) <= 1e-10 * r1.scale);
  auto x4 = RandomDisk(rng, 4);
  const auto r3 = zc::SubsetSignSumResidual(x4, 3);
  CHECK(std::abs(r3.value) <= 1e-9 * r3.scale);
}

TEST_CASE("subset identities vanish for every q <= 6 and r < q") {
  std::mt19937_64 rng(2024);
  for (int q = 2; q <= 6; ++q) {
    for (int r = 1; r < q; ++r) {
      for (int it = 0; it < 100; ++it) {
        const auto x = RandomDisk(rng, q);
        CHECK(zc::SubsetMultinomialResidual(x, r).Relative() <= 1e-9);
        CHECK(zc::SubsetSignSumResidual(x, r).Relative() <= 1e-9);
      }
    }
  }
}

TEST_CASE("sign-sum expression is not identically zero at r = q") {
  // (α1 + α2)^4 + (α1 − α2)^4 − 2α1^4 − 2α2^4 = 12 α1² α2², so the same
  // expression evaluated by hand at q = 2, r = 2 is nonzero.
  const ComplexVal a1 = 0.5;
  const ComplexVal a2 = 0.25;
  const ComplexVal lhs = 2.0 * std::pow(a1, 4) + 2.0 * std::pow(a2, 4) -
                         std::pow(a1 + a2, 4) - std::pow(a1 - a2, 4);
  CHECK(std::abs(lhs + 12.0 * a1 * a1 * a2 * a2) < 1e-15);
}

TEST_CASE("identity arguments") {
  const ComplexVal x[] = {1.0, 2.0, 3.0};
  CHECK_THROWS_AS(zc::SubsetMultinomialResidual(x, 3), zc::InvalidArgument);
  CHECK_THROWS_AS(zc::SubsetSignSumResidual(x, 0), zc::InvalidArgument);
  CHECK_THROWS_AS(zc::SubsetMultinomialResidual(std::span<const ComplexVal>(x, 1), 1), zc::InvalidArgument);
  std::vector<ComplexVal> big(9, 1.0);
  CHECK_THROWS_AS(zc::SubsetMultinomialResidual(big, 2), zc::InvalidArgument);
}

TEST_CASE("cosh product") {
  const double zero[] = {0.0, 0.0};
  const auto [l0, r0] = zc::CoshProductCheck(zero);
  CHECK(l0 == 4.0);
  CHECK(r0 == 4.0);
  const double one[] = {1.0, 1.0};
  const auto [l1, r1] = zc::CoshProductCheck(one);
  CHECK(l1 == doctest::Approx(std::pow(2.0 * std::cosh(1.0), 2)).epsilon(1e-15));
  CHECK(r1 == doctest::Approx(2.0 * std::cosh(2.0) + 2.0).epsilon(1e-15));
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int s = 2; s <= 6; ++s) {
    for (int it = 0; it < 200; ++it) {
      std::vector<double> a(s);
      for (auto& v : a) v = u(rng);
      const auto [lhs, rhs] = zc::CoshProductCheck(a);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
    }
  }
  const double big[] = {31.0, 0.0};
  CHECK_THROWS_AS(zc::CoshProductCheck(big), zc::InvalidArgument);
  const double single[] = {1.0};
  CHECK_THROWS_AS(zc::CoshProductCheck(single), zc::InvalidArgument);
}

TEST_CASE("sinc power integrals in closed form") {
  CHECK(zc::SincPowerIntegralExact(1) == BigRational(1));
  CHECK(zc::SincPowerIntegralExact(2) == BigRational::Parse("2/3"));
  CHECK(zc::SincPowerIntegralExact(3) == BigRational::Parse("11/20"));
  CHECK(zc::SincPowerIntegralExact(4) == BigRational::Parse("151/315"));
  CHECK_THROWS_AS(zc::SincPowerIntegralExact(0), zc::InvalidArgument);
}

TEST_CASE("sinc power integrals against quadrature") {
  for (int n = 1; n <= 6; ++n) {
    double error = 0.0;
    const double numeric = SincPowerNumeric(n, error);
    const double exact = std::numbers::pi * zc::SincPowerIntegralExact(n).ToDouble();
    CAPTURE(n);
    CHECK(error < 1e-8);
    CHECK(std::abs(numeric - exact) <= 1e-8);
  }
}

TEST_CASE("c(r) table") {
  CHECK(zc::COfR(1) == BigRational::Parse("1/4"));
  CHECK(zc::COfR(2) == BigRational::Parse("1/24"));
  CHECK(zc::COfR(3) == BigRational::Parse("11/1280"));
  CHECK(zc::COfR(4) == BigRational::Parse("151/80640"));
  CHECK(zc::COfR(5) == BigRational::Parse("15619/37158912"));
  CHECK_THROWS_AS(zc::COfR(0), zc::InvalidArgument);
}

TEST_CASE("balanced constant") {
  CHECK(zc::CExactBalanced(2) == BigRational::Parse("2/3"));
  CHECK_THROWS_AS(zc::CExactBalanced(1), zc::InvalidArgument);
  // D(2r) = C/(2π)^{2r} equals c(r): in units of π^{−2r} that is C/4^r.
  for (int r = 2; r <= 5; ++r) {
    BigRational four_r = 1;
    for (int i = 0; i < r; ++i) four_r *= BigRational(4);
    CHECK(zc::CExactBalanced(r) / four_r == zc::COfR(r));
  }
  double error = 0.0;
  const double numeric = SincPowerNumeric(3, error) / std::numbers::pi;
  CHECK(std::abs(numeric - zc::CExactBalanced(3).ToDouble()) <= 1e-8);
}

TEST_CASE("dip depth prediction") {
  CHECK(zc::DipDepthPrediction(3, 2) == doctest::Approx(-4.0 / 3.375).epsilon(1e-15));
  CHECK(zc::DipDepthPrediction(4, 2) == doctest::Approx(-12.0 / 5.0625).epsilon(1e-15));
  CHECK(zc::DipDepthPrediction(3, 3) == doctest::Approx(-4.0 / 15.625).epsilon(1e-15));
  CHECK(zc::DipDepthPrediction(3, 2) == doctest::Approx(-1.18).epsilon(0.01));
  CHECK(zc::DipDepthPrediction(4, 2) == doctest::Approx(-2.37).epsilon(0.01));
  CHECK(zc::DipDepthPrediction(3, 3) == doctest::Approx(-0.26).epsilon(0.02));
}

}  // TEST_SUITE
