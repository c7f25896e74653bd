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

#ifndef ZETACORR_REPORT_IO_HPP_
#define ZETACORR_REPORT_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "zetacorr/coefficient_tuple.hpp"
#include "zetacorr/correlation.hpp"
#include "zetacorr/dips.hpp"
#include "zetacorr/identity_suite.hpp"
#include "zetacorr/test_function.hpp"
#include "zetacorr/zeros.hpp"

namespace zetacorr {

using Json = nlohmann::json;

/// printf "%.17g": enough digits to read the same double back.
std::string FormatReal(double value);

Json ToJson(const CoefficientTuple& a);
Json ToJson(const TestFunction& h);
Json ToJson(const CorrelationReport& report);
Json ToJson(const ValidationReport& report);
Json ToJson(const std::vector<DipRecord>& records);
Json ToJson(const IdentitySuiteReport& report);

/// Inverse of ToJson(CorrelationReport). Throws DataError on schema errors.
CorrelationReport CorrelationReportFromJson(const Json& json);

/// Serializes with two-space indentation; doubles use the shortest form that
/// reads back to the same value.
std::string Dump(const Json& json);

/// One row per report: tuple, T, both routes, main term, errors, ratios.
void WriteReportsCsv(const std::vector<CorrelationReport>& reports, std::ostream& out);

}  // namespace zetacorr

#endif  // ZETACORR_REPORT_IO_HPP_
