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

#ifndef ZETACORR_ARITHMETIC_HPP_
#define ZETACORR_ARITHMETIC_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace zetacorr {

using BigInt = mpz_class;

/// Sieve sizes above this are refused with a ResourceError.
inline constexpr std::uint64_t kMaxSieveLimit = 100'000'000;

/// A prime power n = p^k. Λ(n) = log p.
struct PrimePower {
  std::uint64_t n;
  std::uint32_t p;
  std::uint32_t k;
};

/// Von Mangoldt data for 1..limit. Λ is kept as the base prime rather than a
/// logarithm; callers take log(p) themselves at full precision.
///
/// Only prime powers are stored (in ascending n), so memory is O(π(limit)).
class MangoldtTable {
 public:
  std::uint64_t limit() const { return limit_; }

  /// The prime p with n = p^k, or 0 when Λ(n) = 0.
  /// Throws OutOfRange when n is 0 or exceeds limit().
  std::uint32_t BasePrime(std::uint64_t n) const;

  /// Λ(n) = log p for prime powers, exactly 0.0 otherwise.
  double Lambda(std::uint64_t n) const;

  /// All prime powers ≤ limit() in ascending order of n.
  std::span<const PrimePower> prime_powers() const { return prime_powers_; }

  /// The prefix of prime_powers() with n ≤ bound.
  std::span<const PrimePower> PrimePowersUpTo(std::uint64_t bound) const;

  /// Primes ≤ limit() in ascending order.
  std::span<const std::uint32_t> primes() const { return primes_; }

 private:
  friend MangoldtTable SieveMangoldt(std::uint64_t limit);

  std::uint64_t limit_ = 0;
  std::vector<std::uint32_t> primes_;
  std::vector<PrimePower> prime_powers_;
};

/// μ(n) for 1..limit.
class MobiusTable {
 public:
  std::uint64_t limit() const { return values_.empty() ? 0 : values_.size() - 1; }

  /// Throws OutOfRange when n is 0 or exceeds limit().
  int Mu(std::uint64_t n) const;

 private:
  friend MobiusTable SieveMobius(std::uint64_t limit);

  std::vector<std::int8_t> values_;  // index 0 unused
};

/// Linear (Euler) sieve. Throws InvalidArgument for limit == 0 and
/// ResourceError above kMaxSieveLimit.
MangoldtTable SieveMangoldt(std::uint64_t limit);
MobiusTable SieveMobius(std::uint64_t limit);

/// b_m(k) = Σ_{δ|k} μ(δ) δ^{m−1}, the Dirichlet inverse of d ↦ d^{m−1}.
/// Exact. Throws OutOfRange when k > mobius.limit().
BigInt BCoefficient(std::uint64_t k, int m, const MobiusTable& mobius);

/// Nearest integer with halves rounded up: n(n + 1/2) = n + 1 for every
/// integer n, including negative ones (n(−2.5) = −2).
/// Throws InvalidArgument for non-finite or unrepresentable x.
std::int64_t NearestInt(double x);

}  // namespace zetacorr

#endif  // ZETACORR_ARITHMETIC_HPP_
