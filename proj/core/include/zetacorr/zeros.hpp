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

#ifndef ZETACORR_ZEROS_HPP_
#define ZETACORR_ZEROS_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace zetacorr {

/// Ascending positive ordinates γ of nontrivial zeta zeros, read from a
/// plain-text table. Real parts are taken to be 1/2 throughout.
///
/// A value repeated on consecutive lines is kept as a declared multiplicity
/// (every known zero is simple, so this only happens in synthetic input) and
/// recorded in warnings().
class ZeroTable {
 public:
  ZeroTable() = default;

  /// Validates ordering and positivity. Throws DataError (line = index + 1).
  static ZeroTable FromOrdinates(std::vector<double> ordinates,
                                 std::string source = "memory",
                                 int precision_digits = 17);

  std::span<const double> ordinates() const { return ordinates_; }
  std::size_t size() const { return ordinates_.size(); }
  bool empty() const { return ordinates_.empty(); }
  /// Largest ordinate, or 0 for an empty table.
  double max_ordinate() const { return empty() ? 0.0 : ordinates_.back(); }
  const std::string& source() const { return source_; }
  /// Most decimal places seen in the input.
  int precision_digits() const { return precision_digits_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  friend ZeroTable ParseZeros(std::istream& in, const std::string& source);

  std::vector<double> ordinates_;
  std::string source_;
  int precision_digits_ = 0;
  std::vector<std::string> warnings_;
};

/// One decimal ordinate per line, '#' starts a comment line, blank lines are
/// ignored. Parsing is locale-independent. Throws DataError with the line
/// number for unparsable, non-positive or decreasing entries.
ZeroTable ParseZeros(std::istream& in, const std::string& source);

/// Throws IoError when the file cannot be opened.
ZeroTable LoadZeros(const std::filesystem::path& path);

/// Writes the table in the format ParseZeros reads, using the shortest
/// decimal that round-trips each double.
void WriteZeros(const ZeroTable& table, std::ostream& out);

/// All γ with 0 < γ ≤ T (binary search). Throws InvalidArgument for T ≤ 0.
std::span<const double> ZerosUpTo(const ZeroTable& table, double T);

/// Riemann–von Mangoldt main terms: (T/2π) log(T/2π) − T/2π + 7/8.
/// Throws InvalidArgument for T < 2.
double RvmExpected(double T);

struct ValidationCheckpoint {
  double T = 0.0;
  std::size_t count = 0;
  double expected = 0.0;
  double deviation = 0.0;
  bool flagged = false;  ///< deviation > 3 + log T
};

struct ValidationReport {
  std::vector<ValidationCheckpoint> checkpoints;

  bool AnyFlagged() const;
};

/// Compares counts with RvmExpected at T ∈ {100, 500, 1000, max ordinate},
/// skipping checkpoints beyond the table. Throws InvalidArgument when empty.
ValidationReport Validate(const ZeroTable& table);

}  // namespace zetacorr

#endif  // ZETACORR_ZEROS_HPP_
