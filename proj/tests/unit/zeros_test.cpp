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
#include <sstream>
#include <vector>

#include "fixtures.hpp"
#include "zetacorr/error.hpp"
#include "zetacorr/zeros.hpp"

namespace zc = zetacorr;
namespace zt = zetacorr::testing;

namespace {

zc::ZeroTable ParseText(const std::string& text) {
  std::istringstream in(text);
  return zc::ParseZeros(in, "inline");
}

}  // namespace

TEST_SUITE("zeros") {

TEST_CASE("parse comments, blanks and precision") {
  const auto table = ParseText("# header\n\n14.134725142\n  21.022039639  \n+25.010857580\n");
  REQUIRE(table.size() == 3);
  CHECK(table.ordinates()[0] == 14.134725142);
  CHECK(table.ordinates()[2] == 25.010857580);
  CHECK(table.precision_digits() == 9);
  CHECK(table.source() == "inline");
  CHECK(table.warnings().empty());
}

TEST_CASE("empty input gives an empty table") {
  const auto table = ParseText("# nothing\n\n");
  CHECK(table.empty());
  CHECK(table.max_ordinate() == 0.0);
  CHECK_THROWS_AS(zc::Validate(table), zc::InvalidArgument);
}

TEST_CASE("malformed lines report their line number") {
  try {
    ParseText("14.1\nabc\n");
    FAIL("expected a data error");
  } catch (const zc::DataError& e) {
    CHECK(e.line() == 2);
  }
  try {
    ParseText("14.1\n# c\n21.0x\n");
    FAIL("expected a data error");
  } catch (const zc::DataError& e) {
    CHECK(e.line() == 3);
  }
  try {
    ParseText("21.0\n14.1\n");
    FAIL("expected a data error");
  } catch (const zc::DataError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(ParseText("-1.0\n"), zc::DataError);
  CHECK_THROWS_AS(ParseText("0\n"), zc::DataError);
  CHECK_THROWS_AS(zc::ZeroTable::FromOrdinates({3.0, 2.0}), zc::DataError);
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS(zc::LoadZeros("/nonexistent/zeros.txt"), zc::IoError);
}

TEST_CASE("repeated ordinates are kept with a warning") {
  const auto table = ParseText("14.1\n14.1\n21.0\n");
  CHECK(table.size() == 3);
  CHECK(table.warnings().size() == 1);
}

TEST_CASE("zeros up to T") {
  const auto& table = zt::StandardZeros();
  CHECK(zc::ZerosUpTo(table, 15.0).size() == 1);
  CHECK(zc::ZerosUpTo(table, 14.0).empty());
  CHECK(zc::ZerosUpTo(table, 100.0).size() == 29);
  CHECK(zc::ZerosUpTo(table, table.ordinates()[9]).size() == 10);
  CHECK_THROWS_AS(zc::ZerosUpTo(table, 0.0), zc::InvalidArgument);
}

TEST_CASE("zeros up to T grows with T") {
  const auto& table = zt::StandardZeros();
  std::size_t previous = 0;
  for (double T = 10.0; T <= 2500.0; T += 7.3) {
    const std::size_t n = zc::ZerosUpTo(table, T).size();
    CHECK(n >= previous);
    previous = n;
  }
}

TEST_CASE("Riemann-von Mangoldt main term") {
  const double T = 2.0 * std::numbers::pi * std::numbers::e;
  CHECK(zc::RvmExpected(T) == doctest::Approx(0.875).epsilon(1e-14));
  CHECK_THROWS_AS(zc::RvmExpected(1.0), zc::InvalidArgument);
}

TEST_CASE("standard table passes validation") {
  const auto& table = zt::StandardZeros();
  CHECK(table.size() == 2000);
  const auto report = zc::Validate(table);
  CHECK_FALSE(report.AnyFlagged());
  REQUIRE(report.checkpoints.size() == 4);
  CHECK(report.checkpoints[0].count == 29);
  CHECK(report.checkpoints[1].count == 269);
  CHECK(report.checkpoints[2].count == 649);
  for (const auto& cp : report.checkpoints) CHECK(cp.deviation < 3.0);
}

TEST_CASE("a table with gaps is flagged") {
  const auto all = zt::StandardZeros().ordinates();
  std::vector<double> thinned;
  for (std::size_t i = 0; i < 700; i += 2) thinned.push_back(all[i]);
  CHECK(zc::Validate(zc::ZeroTable::FromOrdinates(thinned)).AnyFlagged());
  CHECK(zc::Validate(zc::ZeroTable::FromOrdinates({1000.0})).AnyFlagged());
}

TEST_CASE("mean spacing matches the local density") {
  const auto g = zt::StandardZeros().ordinates();
  const std::size_t lo = 1000;
  const std::size_t hi = 1999;
  const double mean_gap = (g[hi] - g[lo]) / static_cast<double>(hi - lo);
  const double mid = 0.5 * (g[hi] + g[lo]);
  const double density_gap = 2.0 * std::numbers::pi / std::log(mid / (2.0 * std::numbers::pi));
  CHECK(std::abs(mean_gap / density_gap - 1.0) < 0.1);
}

TEST_CASE("write and read back") {
  const auto original = zt::FirstZeros(50);
  std::stringstream buffer;
  zc::WriteZeros(original, buffer);
  const auto copy = zc::ParseZeros(buffer, "copy");
  REQUIRE(copy.size() == original.size());
  for (std::size_t i = 0; i < copy.size(); ++i) {
    CHECK(copy.ordinates()[i] == original.ordinates()[i]);
  }
}

}  // TEST_SUITE
