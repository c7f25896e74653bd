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

#include "zetacorr/arithmetic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "zetacorr/error.hpp"

namespace zetacorr {
namespace {

void CheckLimit(std::uint64_t limit, const char* what) {
  if (limit == 0) {
    throw InvalidArgument(std::string(what) + ": limit must be >= 1");
  }
  if (limit > kMaxSieveLimit) {
    throw ResourceError(std::string(what) + ": limit " + std::to_string(limit) +
                            " exceeds the sieve cap " +
                            std::to_string(kMaxSieveLimit),
                        static_cast<double>(limit));
  }
}

}  // namespace

std::uint32_t MangoldtTable::BasePrime(std::uint64_t n) const {
  if (n == 0 || n > limit_) {
    throw OutOfRange("Mangoldt table: n=" + std::to_string(n) +
                     " outside [1, " + std::to_string(limit_) + "]");
  }
  auto it = std::lower_bound(
      prime_powers_.begin(), prime_powers_.end(), n,
      [](const PrimePower& pp, std::uint64_t v) { return pp.n < v; });
  return (it != prime_powers_.end() && it->n == n) ? it->p : 0;
}

double MangoldtTable::Lambda(std::uint64_t n) const {
  const std::uint32_t p = BasePrime(n);
  return p == 0 ? 0.0 : std::log(static_cast<double>(p));
}

std::span<const PrimePower> MangoldtTable::PrimePowersUpTo(
    std::uint64_t bound) const {
  auto it = std::upper_bound(
      prime_powers_.begin(), prime_powers_.end(), bound,
      [](std::uint64_t v, const PrimePower& pp) { return v < pp.n; });
  return {prime_powers_.data(),
          static_cast<std::size_t>(it - prime_powers_.begin())};
}

MangoldtTable SieveMangoldt(std::uint64_t limit) {
  CheckLimit(limit, "sieve_mangoldt");
  MangoldtTable table;
  table.limit_ = limit;

  std::vector<bool> composite(limit + 1, false);
  auto& primes = table.primes_;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!composite[i]) primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint32_t p : primes) {
      const std::uint64_t ip = i * p;
      if (ip > limit) break;
      composite[ip] = true;
      if (i % p == 0) break;
    }
  }

  auto& powers = table.prime_powers_;
  powers.reserve(primes.size() + primes.size() / 8 + 16);
  for (std::uint32_t p : primes) {
    std::uint64_t q = p;
    std::uint32_t k = 1;
    while (true) {
      powers.push_back({q, p, k});
      if (q > limit / p) break;
      q *= p;
      ++k;
    }
  }
  std::sort(powers.begin(), powers.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.n < b.n; });
  return table;
}

int MobiusTable::Mu(std::uint64_t n) const {
  if (n == 0 || n >= values_.size()) {
    throw OutOfRange("Mobius table: n=" + std::to_string(n) + " outside [1, " +
                     std::to_string(limit()) + "]");
  }
  return values_[n];
}

MobiusTable SieveMobius(std::uint64_t limit) {
  CheckLimit(limit, "sieve_mobius");
  MobiusTable table;
  auto& mu = table.values_;
  mu.assign(limit + 1, 0);
  mu[1] = 1;
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (std::uint64_t p : primes) {
      const std::uint64_t ip = i * p;
      if (ip > limit) break;
      composite[ip] = true;
      if (i % p == 0) {
        mu[ip] = 0;
        break;
      }
      mu[ip] = static_cast<std::int8_t>(-mu[i]);
    }
  }
  return table;
}

BigInt BCoefficient(std::uint64_t k, int m, const MobiusTable& mobius) {
  if (m < 1) throw InvalidArgument("b_coefficient: m must be >= 1");
  if (k == 0) throw InvalidArgument("b_coefficient: k must be >= 1");
  if (k > mobius.limit()) {
    throw OutOfRange("b_coefficient: k=" + std::to_string(k) +
                     " exceeds Mobius table limit " +
                     std::to_string(mobius.limit()));
  }
  BigInt total = 0;
  BigInt power;
  auto add_divisor = [&](std::uint64_t d) {
    const int mu = mobius.Mu(d);
    if (mu == 0) return;
    mpz_ui_pow_ui(power.get_mpz_t(), d, static_cast<unsigned long>(m - 1));
    if (mu > 0) {
      total += power;
    } else {
      total -= power;
    }
  };
  for (std::uint64_t d = 1; d * d <= k; ++d) {
    if (k % d != 0) continue;
    add_divisor(d);
    if (d * d != k) add_divisor(k / d);
  }
  return total;
}

std::int64_t NearestInt(double x) {
  if (!std::isfinite(x)) {
    throw InvalidArgument("nearest_int: argument must be finite");
  }
  const double floor_x = std::floor(x);
  constexpr double kBound = 9.0e18;
  if (floor_x < -kBound || floor_x > kBound) {
    throw InvalidArgument("nearest_int: argument out of int64 range");
  }
  // x − floor(x) is exact in binary floating point.
  const double frac = x - floor_x;
  const auto n = static_cast<std::int64_t>(floor_x);
  return frac >= 0.5 ? n + 1 : n;
}

}  // namespace zetacorr
