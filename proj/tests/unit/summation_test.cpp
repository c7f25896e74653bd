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
#include <random>
#include <stdexcept>
#include <vector>

#include "zetacorr/summation.hpp"

namespace zc = zetacorr;

TEST_SUITE("summation") {

TEST_CASE("compensated sum recovers cancelled low bits") {
  zc::CompensatedSum sum;
  sum.Add(1.0);
  for (int i = 0; i < 1000; ++i) sum.Add(1e-16);
  sum.Add(-1.0);
  CHECK(std::abs(sum.value() - 1e-13) < 1e-26);

  zc::CompensatedSum big;
  for (double x : {1e100, 1.0, -1e100}) big += x;
  CHECK(big.value() == 1.0);
}

TEST_CASE("compensated sum matches long double on random data") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  zc::CompensatedSum sum;
  long double reference = 0.0L;
  for (int i = 0; i < 100000; ++i) {
    const double x = u(rng) * std::pow(10.0, (i % 9) - 4);
    sum.Add(x);
    reference += x;
  }
  CHECK(std::abs(sum.value() - static_cast<double>(reference)) <
        1e-15 * std::abs(static_cast<double>(reference)) + 1e-12);
}

TEST_CASE("merge keeps compensation") {
  std::vector<double> data;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1e8, 1e8);
  for (int i = 0; i < 5000; ++i) data.push_back(u(rng));
  zc::CompensatedSum whole;
  for (double x : data) whole.Add(x);
  zc::CompensatedSum left;
  zc::CompensatedSum right;
  for (std::size_t i = 0; i < data.size(); ++i) (i < 2000 ? left : right).Add(data[i]);
  left.Merge(right);
  CHECK(std::abs(left.value() - whole.value()) <= 1e-16 * 1e8);
}

TEST_CASE("chunk map is independent of thread count") {
  std::vector<double> data(100'003);
  for (std::size_t i = 0; i < data.size(); ++i) data[i] = std::sin(0.37 * i) / (1.0 + i);
  auto run = [&](unsigned threads) {
    const auto parts = zc::MapChunks<zc::CompensatedSum>(
        data.size(), 1000, threads, [&](std::size_t b, std::size_t e) {
          zc::CompensatedSum s;
          for (std::size_t i = b; i < e; ++i) s.Add(data[i]);
          return s;
        });
    zc::CompensatedSum total;
    for (const auto& p : parts) total.Merge(p);
    return std::pair{parts.size(), total.value()};
  };
  const auto one = run(1);
  CHECK(one.first == 101);
  for (unsigned t : {2u, 3u, 8u}) CHECK(run(t) == one);
  CHECK(zc::MapChunks<int>(0, 10, 4, [](std::size_t, std::size_t) { return 1; }).empty());
}

TEST_CASE("chunk map forwards worker exceptions") {
  auto boom = [](std::size_t b, std::size_t) -> int {
    if (b == 50) throw std::runtime_error("chunk failed");
    return 0;
  };
  CHECK_THROWS_AS(zc::MapChunks<int>(100, 10, 4, boom), std::runtime_error);
  CHECK_THROWS_AS(zc::MapChunks<int>(100, 10, 1, boom), std::runtime_error);
}

}  // TEST_SUITE
