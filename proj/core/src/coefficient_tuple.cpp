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

#include "zetacorr/coefficient_tuple.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>

#include "zetacorr/error.hpp"

namespace zetacorr {

CoefficientTuple CoefficientTuple::Make(std::vector<std::int64_t> values) {
  if (values.size() < 3) {
    throw InvalidArgument("coefficient tuple: need m >= 3 entries, got " +
                          std::to_string(values.size()));
  }
  std::int64_t sum = 0;
  for (std::int64_t v : values) {
    if (v == 0) throw InvalidArgument("coefficient tuple: entries must be nonzero");
    sum += v;
  }
  if (sum != 0) {
    throw InvalidArgument("coefficient tuple: entries must sum to 0 (sum is " +
                          std::to_string(sum) + ")");
  }
  std::vector<std::int64_t> distinct = values;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    for (std::size_t j = i + 1; j < distinct.size(); ++j) {
      if (std::gcd(distinct[i], distinct[j]) != 1) {
        throw InvalidArgument("coefficient tuple: distinct entries " +
                              std::to_string(distinct[i]) + " and " +
                              std::to_string(distinct[j]) + " are not coprime");
      }
    }
  }
  CoefficientTuple tuple;
  for (std::int64_t v : values) {
    if (v > 0) tuple.positive_sum_ += v;
    tuple.max_abs_ = std::max(tuple.max_abs_, std::abs(v));
  }
  tuple.values_ = std::move(values);
  return tuple;
}

CoefficientTuple CoefficientTuple::Parse(const std::string& text) {
  std::vector<std::int64_t> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(pos, comma - pos);
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) {
      throw InvalidArgument("coefficient tuple: empty entry in '" + text + "'");
    }
    item = item.substr(first, last - first + 1);
    const char* begin = item.data();
    if (*begin == '+') ++begin;
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(begin, item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw InvalidArgument("coefficient tuple: cannot parse '" + item + "'");
    }
    values.push_back(v);
    pos = comma + 1;
  }
  return Make(std::move(values));
}

bool CoefficientTuple::IsBalanced() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](std::int64_t v) { return v == 1 || v == -1; });
}

std::string CoefficientTuple::ToString() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

}  // namespace zetacorr
