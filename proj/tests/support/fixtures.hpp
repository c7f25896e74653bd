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

// Shared data and brute-force reference computations for the tests. Nothing
// here calls into the library's own evaluators.

#ifndef ZETACORR_TESTS_SUPPORT_FIXTURES_HPP_
#define ZETACORR_TESTS_SUPPORT_FIXTURES_HPP_

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "zetacorr/arithmetic.hpp"
#include "zetacorr/summation.hpp"
#include "zetacorr/test_function.hpp"
#include "zetacorr/zeros.hpp"

namespace zetacorr::testing {

inline std::filesystem::path DataPath(const std::string& name) {
  return std::filesystem::path(ZETACORR_TEST_DATA_DIR) / name;
}

/// First 2000 ordinates, loaded once.
inline const ZeroTable& StandardZeros() {
  static const ZeroTable table = LoadZeros(DataPath("zeros_2000.txt"));
  return table;
}

inline ZeroTable FirstZeros(std::size_t count) {
  const auto all = StandardZeros().ordinates();
  return ZeroTable::FromOrdinates(
      std::vector<double>(all.begin(), all.begin() + static_cast<long>(count)), "prefix");
}

/// Sieve of at least `limit`, shared across tests in one process.
inline const MangoldtTable& SharedSieve(std::uint64_t limit) {
  static std::mutex mutex;
  static std::map<std::uint64_t, std::unique_ptr<MangoldtTable>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.lower_bound(limit);
  if (it != cache.end()) return *it->second;
  auto table = std::make_unique<MangoldtTable>(SieveMangoldt(limit));
  return *cache.emplace(limit, std::move(table)).first->second;
}

/// Smallest prime factor by trial division; 0 for n < 2.
inline std::uint64_t TrialSmallestFactor(std::uint64_t n) {
  if (n < 2) return 0;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return d;
  }
  return n;
}

/// Λ(n) by trial division.
inline double TrialLambda(std::uint64_t n) {
  const std::uint64_t p = TrialSmallestFactor(n);
  if (p == 0) return 0.0;
  std::uint64_t rest = n;
  while (rest % p == 0) rest /= p;
  return rest == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

/// μ(n) by trial division.
inline int TrialMobius(std::uint64_t n) {
  int mu = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    n /= d;
    if (n % d == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

/// Base prime of each prime power n ≤ limit (0 elsewhere), by a plain
/// Eratosthenes sieve.
inline std::vector<std::uint32_t> EratosthenesBasePrimes(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint32_t> base(limit + 1, 0);
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
    for (std::uint64_t pk = p; pk <= limit; pk *= p) {
      base[pk] = static_cast<std::uint32_t>(p);
      if (pk > limit / p) break;
    }
  }
  return base;
}

/// Σ_{n≤N} Λ(n)^m n^{−σ}, long double accumulation.
inline long double BruteMangoldtSeries(std::uint64_t n_max, int m, double sigma) {
  const auto base = EratosthenesBasePrimes(n_max);
  long double sum = 0.0L;
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    if (base[n] == 0) continue;
    const long double lambda = std::log(static_cast<long double>(base[n]));
    sum += std::pow(lambda, m) * std::pow(static_cast<long double>(n), -sigma);
  }
  return sum;
}

/// ∫ h(t) y(t; a) dt term by term: y = 2 Σ Λ^m(n) n^{−S} cos(t log n) and
/// ∫ h(t) cos(t log n) dt = ĥ(log n / 2π) because h is even.
inline double FourierYIntegral(const TestFunction& h, int m, double S, std::uint64_t n_max) {
  const auto base = EratosthenesBasePrimes(n_max);
  long double sum = 0.0L;
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    if (base[n] == 0) continue;
    const double log_n = std::log(static_cast<double>(n));
    const double weight = std::pow(std::log(static_cast<double>(base[n])), m) *
                          std::pow(static_cast<double>(n), -S);
    sum += weight * h.Fourier(log_n / (2.0 * std::numbers::pi));
  }
  return static_cast<double>(2.0L * sum);
}

/// Plain nested loops over all m-tuples (m ≤ 5) with Δ summed left to right
/// and the same compensated accumulator as the library.
inline double NaiveH(const TestFunction& h, std::span<const std::int64_t> a,
                     std::span<const double> g) {
  const std::size_t n = g.size();
  const int m = static_cast<int>(a.size());
  CompensatedSum sum;
  std::vector<std::size_t> idx(m, 0);
  if (n == 0) return 0.0;
  while (true) {
    double delta = static_cast<double>(a[0]) * g[idx[0]];
    for (int k = 1; k < m; ++k) delta += static_cast<double>(a[k]) * g[idx[k]];
    sum.Add(h.Value(delta));
    int k = m - 1;
    while (k >= 0 && ++idx[k] == n) idx[k--] = 0;
    if (k < 0) break;
  }
  return sum.value();
}

}  // namespace zetacorr::testing

#endif  // ZETACORR_TESTS_SUPPORT_FIXTURES_HPP_
