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

#include "zetacorr/combinatorics.hpp"

#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "zetacorr/error.hpp"
#include "zetacorr/summation.hpp"

namespace zetacorr {
namespace {

void CheckIdentityArgs(std::size_t q, int r, const char* what) {
  if (q < 2) throw InvalidArgument(std::string(what) + ": need q >= 2");
  if (q > static_cast<std::size_t>(kMaxIdentityArity)) {
    throw InvalidArgument(std::string(what) + ": q exceeds " +
                          std::to_string(kMaxIdentityArity));
  }
  if (r < 1 || static_cast<std::size_t>(r) >= q) {
    throw InvalidArgument(std::string(what) + ": need 1 <= r < q");
  }
}

double Factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Visits every (j_1, …, j_s) with j_i ≥ 0 and Σ j_i = total.
void ForEachComposition(int total, int parts,
                        const std::function<void(std::span<const int>)>& visit) {
  std::vector<int> j(static_cast<std::size_t>(parts), 0);
  std::function<void(int, int)> rec = [&](int index, int remaining) {
    if (index == parts - 1) {
      j[static_cast<std::size_t>(index)] = remaining;
      visit(j);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      j[static_cast<std::size_t>(index)] = v;
      rec(index + 1, remaining - v);
    }
  };
  rec(0, total);
}

std::vector<std::size_t> SubsetMembers(unsigned mask) {
  std::vector<std::size_t> members;
  for (std::size_t k = 0; mask != 0; ++k, mask >>= 1) {
    if (mask & 1u) members.push_back(k);
  }
  return members;
}

BigRational IntPow(long base, int exponent) {
  BigRational out = 1;
  const BigRational b = base;
  for (int i = 0; i < std::abs(exponent); ++i) out *= b;
  return exponent < 0 ? BigRational(1) / out : out;
}

// Σ_{k=1}^{n} k^{2n−3} ∏_{ℓ≠k} 1/(k² − ℓ²)
BigRational SincKernelSum(int n) {
  BigRational sum = 0;
  for (long k = 1; k <= n; ++k) {
    BigRational term = IntPow(k, 2 * n - 3);
    for (long l = 1; l <= n; ++l) {
      if (l == k) continue;
      term /= BigRational(k * k - l * l);
    }
    sum += term;
  }
  return sum;
}

}  // namespace

BigInt Multinomial(unsigned top, std::span<const unsigned> parts) {
  const unsigned long total =
      std::accumulate(parts.begin(), parts.end(), 0ul);
  if (total != top) {
    throw InvalidArgument("multinomial: parts sum to " + std::to_string(total) +
                          ", expected " + std::to_string(top));
  }
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), top);
  BigInt f;
  for (unsigned p : parts) {
    mpz_fac_ui(f.get_mpz_t(), p);
    result /= f;
  }
  return result;
}

IdentityResidual SubsetMultinomialResidual(std::span<const ComplexVal> x, int r) {
  const std::size_t q = x.size();
  CheckIdentityArgs(q, r, "subset_multinomial");
  const double two_r_factorial = Factorial(2 * r);

  CompensatedComplexSum total;
  double scale = 0.0;
  for (unsigned mask = 1; mask < (1u << q); ++mask) {
    const auto members = SubsetMembers(mask);
    const int s = static_cast<int>(members.size());
    const double sign = (s % 2 == 1) ? 1.0 : -1.0;
    ForEachComposition(r, s, [&](std::span<const int> j) {
      double coefficient = two_r_factorial;
      ComplexVal monomial = 1.0;
      for (int i = 0; i < s; ++i) {
        const int ji = j[static_cast<std::size_t>(i)];
        coefficient /= Factorial(2 * ji);
        for (int e = 0; e < ji; ++e) monomial *= x[members[static_cast<std::size_t>(i)]];
      }
      const ComplexVal term = sign * coefficient * monomial;
      scale = std::max(scale, std::abs(term));
      total.Add(term);
    });
  }
  return {total.value(), scale};
}

IdentityResidual SubsetSignSumResidual(std::span<const ComplexVal> alpha, int r) {
  const std::size_t q = alpha.size();
  CheckIdentityArgs(q, r, "subset_sign_sum");

  CompensatedComplexSum total;
  double scale = 0.0;
  for (unsigned mask = 1; mask < (1u << q); ++mask) {
    const auto members = SubsetMembers(mask);
    const int s = static_cast<int>(members.size());
    const double weight =
        std::ldexp(1.0, static_cast<int>(q) - s) * ((s % 2 == 1) ? 1.0 : -1.0);
    // Bit i of `signs` chooses ε_{i+2} = −1.
    for (unsigned signs = 0; signs < (1u << (s - 1)); ++signs) {
      ComplexVal base = alpha[members[0]];
      for (int i = 1; i < s; ++i) {
        const ComplexVal a = alpha[members[static_cast<std::size_t>(i)]];
        base += ((signs >> (i - 1)) & 1u) ? -a : a;
      }
      ComplexVal power = 1.0;
      for (int e = 0; e < 2 * r; ++e) power *= base;
      const ComplexVal term = weight * power;
      scale = std::max(scale, std::abs(term));
      total.Add(term);
    }
  }
  return {total.value(), scale};
}

std::pair<double, double> CoshProductCheck(std::span<const double> a) {
  const std::size_t s = a.size();
  if (s < 2) throw InvalidArgument("cosh_product_check: need s >= 2");
  if (s > 20) throw InvalidArgument("cosh_product_check: s > 20 is not supported");
  for (double v : a) {
    if (!std::isfinite(v) || std::abs(v) > 30.0) {
      throw InvalidArgument("cosh_product_check: |A| must be <= 30 (overflow guard)");
    }
  }
  double lhs = 1.0;
  for (double v : a) lhs *= 2.0 * std::cosh(v);

  CompensatedSum rhs;
  for (unsigned signs = 0; signs < (1u << (s - 1)); ++signs) {
    double arg = a[0];
    for (std::size_t i = 1; i < s; ++i) {
      arg += ((signs >> (i - 1)) & 1u) ? -a[i] : a[i];
    }
    rhs.Add(2.0 * std::cosh(arg));
  }
  return {lhs, rhs.value()};
}

BigRational SincPowerIntegralExact(int n) {
  if (n < 1) throw InvalidArgument("sinc_power_integral_exact: need n >= 1");
  return BigRational(n) * SincKernelSum(n);
}

BigRational COfR(int r) {
  if (r < 1) throw InvalidArgument("c_of_r: need r >= 1");
  BigInt four_pow;
  mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, static_cast<unsigned long>(r));
  // (2π)^{2r} = 4^r π^{2r}; the π^{2r} is the factor being removed.
  return BigRational(r) * SincKernelSum(r) / BigRational(four_pow);
}

BigRational CExactBalanced(int r) {
  if (r < 2) throw InvalidArgument("C_exact_balanced: need r >= 2");
  return SincPowerIntegralExact(r);
}

double DipDepthPrediction(int m, std::int64_t positive_sum) {
  if (m < 2) throw InvalidArgument("dip_depth_prediction: need m >= 2");
  if (positive_sum < 1) throw InvalidArgument("dip_depth_prediction: need S >= 1");
  return -2.0 * Factorial(m - 1) /
         std::pow(static_cast<double>(positive_sum) - 0.5, m);
}

}  // namespace zetacorr
