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

#ifndef ZETACORR_RATIONAL_HPP_
#define ZETACORR_RATIONAL_HPP_

#include <compare>
#include <ostream>
#include <string>

#include <gmpxx.h>

#include "zetacorr/arithmetic.hpp"

namespace zetacorr {

/// Exact rational number, always in lowest terms with a positive denominator.
/// Backed by GMP's mpq_t.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : value_(value) {}  // NOLINT: implicit by design of arithmetic types
  BigRational(const BigInt& value) : value_(value) {}  // NOLINT
  /// Throws InvalidArgument when den == 0.
  BigRational(const BigInt& num, const BigInt& den);

  /// Parses "p/q" or "p". Throws InvalidArgument on malformed input.
  static BigRational Parse(const std::string& text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  double ToDouble() const { return value_.get_d(); }
  /// "p/q", or "p" when the denominator is 1.
  std::string ToString() const;

  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  /// Throws InvalidArgument on division by zero.
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) {
    return lhs += rhs;
  }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) {
    return lhs -= rhs;
  }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) {
    return lhs *= rhs;
  }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) {
    return lhs /= rhs;
  }
  BigRational operator-() const;

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigRational& a,
                                          const BigRational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& q) {
    return os << q.ToString();
  }

 private:
  mpq_class value_;
};

}  // namespace zetacorr

#endif  // ZETACORR_RATIONAL_HPP_
