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

#include "zetacorr/zeros.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>

#include "zetacorr/error.hpp"

namespace zetacorr {
namespace {

std::string_view Trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

int DecimalPlaces(std::string_view token) {
  const auto dot = token.find('.');
  if (dot == std::string_view::npos) return 0;
  int places = 0;
  for (std::size_t i = dot + 1; i < token.size(); ++i) {
    if (token[i] < '0' || token[i] > '9') break;
    ++places;
  }
  return places;
}

void CheckNext(double previous, double value, std::size_t line,
               std::vector<std::string>& warnings) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DataError("zero table: non-positive ordinate at line " +
                        std::to_string(line),
                    line);
  }
  if (value < previous) {
    throw DataError("zero table: ordinates decrease at line " +
                        std::to_string(line),
                    line);
  }
  if (value == previous) {
    warnings.push_back("line " + std::to_string(line) +
                       ": repeated ordinate kept as multiplicity");
  }
}

}  // namespace

ZeroTable ZeroTable::FromOrdinates(std::vector<double> ordinates,
                                   std::string source, int precision_digits) {
  ZeroTable table;
  double previous = 0.0;
  for (std::size_t i = 0; i < ordinates.size(); ++i) {
    CheckNext(previous, ordinates[i], i + 1, table.warnings_);
    previous = ordinates[i];
  }
  table.ordinates_ = std::move(ordinates);
  table.source_ = std::move(source);
  table.precision_digits_ = precision_digits;
  return table;
}

ZeroTable ParseZeros(std::istream& in, const std::string& source) {
  ZeroTable table;
  table.source_ = source;
  std::string raw;
  std::size_t line = 0;
  double previous = 0.0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view text = Trim(raw);
    if (text.empty() || text.front() == '#') continue;
    double value = 0.0;
    const char* begin = text.data();
    const char* end = text.data() + text.size();
    if (*begin == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
      throw DataError("zero table: cannot parse '" + std::string(text) +
                          "' at line " + std::to_string(line),
                      line);
    }
    CheckNext(previous, value, line, table.warnings_);
    previous = value;
    table.ordinates_.push_back(value);
    table.precision_digits_ = std::max(table.precision_digits_, DecimalPlaces(text));
  }
  return table;
}

ZeroTable LoadZeros(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open zero table '" + path.string() + "'");
  return ParseZeros(in, path.string());
}

void WriteZeros(const ZeroTable& table, std::ostream& out) {
  out << "# source: " << table.source() << '\n';
  std::array<char, 64> buffer{};
  for (double gamma : table.ordinates()) {
    const auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), gamma);
    out.write(buffer.data(), ptr - buffer.data());
    out << '\n';
  }
}

std::span<const double> ZerosUpTo(const ZeroTable& table, double T) {
  if (!(T > 0.0)) throw InvalidArgument("zeros_up_to: need T > 0");
  const auto all = table.ordinates();
  const auto end = std::upper_bound(all.begin(), all.end(), T);
  return all.first(static_cast<std::size_t>(end - all.begin()));
}

double RvmExpected(double T) {
  if (!(T >= 2.0)) throw InvalidArgument("rvm_expected: need T >= 2");
  const double x = T / (2.0 * std::numbers::pi);
  return x * std::log(x) - x + 0.875;
}

bool ValidationReport::AnyFlagged() const {
  return std::any_of(checkpoints.begin(), checkpoints.end(),
                     [](const ValidationCheckpoint& c) { return c.flagged; });
}

ValidationReport Validate(const ZeroTable& table) {
  if (table.empty()) throw InvalidArgument("validate: zero table is empty");
  std::vector<double> points = {100.0, 500.0, 1000.0};
  const double top = table.max_ordinate();
  points.erase(std::remove_if(points.begin(), points.end(),
                              [top](double T) { return T > top; }),
               points.end());
  if (std::find(points.begin(), points.end(), top) == points.end()) {
    points.push_back(top);
  }
  ValidationReport report;
  for (double T : points) {
    if (T < 2.0) continue;
    ValidationCheckpoint cp;
    cp.T = T;
    cp.count = ZerosUpTo(table, T).size();
    cp.expected = RvmExpected(T);
    cp.deviation = std::abs(static_cast<double>(cp.count) - cp.expected);
    cp.flagged = cp.deviation > 3.0 + std::log(T);
    report.checkpoints.push_back(cp);
  }
  return report;
}

}  // namespace zetacorr
