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

#ifndef ZETACORR_COEFFICIENT_TUPLE_HPP_
#define ZETACORR_COEFFICIENT_TUPLE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace zetacorr {

/// Integer coefficients a = (a_1, …, a_m) of the linear form Σ a_k γ_k.
///
/// Valid tuples have m ≥ 3, no zero entries, Σ a_k = 0, and any two distinct
/// values coprime. Construction through Make() enforces all of these.
class CoefficientTuple {
 public:
  /// Throws InvalidArgument naming the first violated condition.
  static CoefficientTuple Make(std::vector<std::int64_t> values);
  /// Parses "1,1,-2" (whitespace tolerated) and validates.
  static CoefficientTuple Parse(const std::string& text);

  std::span<const std::int64_t> values() const { return values_; }
  int m() const { return static_cast<int>(values_.size()); }
  /// Sum of the positive entries.
  std::int64_t S() const { return positive_sum_; }
  /// Σ |a_k| (= 2S).
  std::int64_t two_r() const { return 2 * positive_sum_; }
  std::int64_t max_abs() const { return max_abs_; }
  /// True for (1,…,1,−1,…,−1) in any order.
  bool IsBalanced() const;

  /// "1,1,-2"
  std::string ToString() const;

  friend bool operator==(const CoefficientTuple&, const CoefficientTuple&) = default;

 private:
  CoefficientTuple() = default;

  std::vector<std::int64_t> values_;
  std::int64_t positive_sum_ = 0;
  std::int64_t max_abs_ = 0;
};

}  // namespace zetacorr

#endif  // ZETACORR_COEFFICIENT_TUPLE_HPP_
