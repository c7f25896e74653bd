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

#include "zetacorr/rational.hpp"

#include "zetacorr/error.hpp"

namespace zetacorr {

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidArgument("BigRational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

BigRational BigRational::Parse(const std::string& text) {
  BigRational q;
  if (text.empty() || q.value_.set_str(text, 10) != 0) {
    throw InvalidArgument("BigRational: cannot parse '" + text + "'");
  }
  if (q.value_.get_den() == 0) {
    throw InvalidArgument("BigRational: zero denominator in '" + text + "'");
  }
  q.value_.canonicalize();
  return q;
}

std::string BigRational::ToString() const { return value_.get_str(10); }

BigRational& BigRational::operator+=(const BigRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (sgn(rhs.value_) == 0) throw InvalidArgument("BigRational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

BigRational BigRational::operator-() const {
  BigRational out;
  out.value_ = -value_;
  return out;
}

}  // namespace zetacorr
