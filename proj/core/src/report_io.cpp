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

#include "zetacorr/report_io.hpp"

#include <cstdio>
#include <ostream>

#include "zetacorr/error.hpp"

namespace zetacorr {

std::string FormatReal(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

Json ToJson(const CoefficientTuple& a) {
  Json out = Json::array();
  for (auto v : a.values()) out.push_back(v);
  return out;
}

Json ToJson(const TestFunction& h) {
  return {{"family", ToString(h.family())},
          {"c", h.c()},
          {"s", h.s()},
          {"amplitude", h.amplitude()}};
}

Json ToJson(const CorrelationReport& report) {
  const double scaled_main = report.ScaledMainTerm();
  return {
      {"H_direct", report.H_direct},
      {"H_spectral", report.H_spectral},
      {"main_term", report.main_term},
      {"T", report.T},
      {"tuple", ToJson(report.tuple)},
      {"h_params", ToJson(report.h_params)},
      {"diagnostics",
       {{"zero_count", report.zero_count},
        {"tuple_count", report.tuple_count},
        {"pruned_fraction", report.pruned_fraction},
        {"spectral_grid", report.spectral_grid},
        {"xi_max", report.xi_max},
        {"claimed_errors",
         {{"direct", report.error_direct},
          {"spectral", report.error_spectral},
          {"main_term", report.error_main_term}}},
        {"warnings", report.warnings}}},
      {"scaled",
       {{"H_direct", report.ScaledDirect()},
        {"main_term", scaled_main},
        {"ratio", scaled_main != 0.0 ? report.ScaledDirect() / scaled_main : 0.0}}},
      {"routes_agree", report.RoutesAgree()},
  };
}

CorrelationReport CorrelationReportFromJson(const Json& json) {
  try {
    std::vector<std::int64_t> values = json.at("tuple").get<std::vector<std::int64_t>>();
    const Json& h = json.at("h_params");
    ParseTestFunctionFamily(h.at("family").get<std::string>());
    const Json& diag = json.at("diagnostics");
    const Json& errors = diag.at("claimed_errors");
    return CorrelationReport{
        .H_direct = json.at("H_direct").get<double>(),
        .H_spectral = json.at("H_spectral").get<double>(),
        .main_term = json.at("main_term").get<double>(),
        .T = json.at("T").get<double>(),
        .tuple = CoefficientTuple::Make(std::move(values)),
        .h_params = TestFunction::GaussianTriplet(h.at("c").get<double>(),
                                                  h.at("s").get<double>(),
                                                  h.at("amplitude").get<double>()),
        .zero_count = diag.at("zero_count").get<std::uint64_t>(),
        .tuple_count = diag.at("tuple_count").get<std::uint64_t>(),
        .pruned_fraction = diag.at("pruned_fraction").get<double>(),
        .spectral_grid = diag.at("spectral_grid").get<std::uint64_t>(),
        .xi_max = diag.at("xi_max").get<double>(),
        .error_direct = errors.at("direct").get<double>(),
        .error_spectral = errors.at("spectral").get<double>(),
        .error_main_term = errors.at("main_term").get<double>(),
        .warnings = diag.at("warnings").get<std::vector<std::string>>(),
    };
  } catch (const Json::exception& e) {
    throw DataError(std::string("correlation report: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw DataError(std::string("correlation report: ") + e.what());
  }
}

Json ToJson(const ValidationReport& report) {
  Json points = Json::array();
  for (const auto& cp : report.checkpoints) {
    points.push_back({{"T", cp.T},
                      {"count", cp.count},
                      {"expected", cp.expected},
                      {"deviation", cp.deviation},
                      {"flagged", cp.flagged}});
  }
  return {{"checkpoints", points}, {"any_flagged", report.AnyFlagged()}};
}

Json ToJson(const std::vector<DipRecord>& records) {
  Json out = Json::array();
  for (const auto& r : records) {
    out.push_back({{"t_min", r.t_min},
                   {"y_min", r.y_min},
                   {"matched_gamma", r.matched_gamma ? Json(*r.matched_gamma) : Json(nullptr)},
                   {"distance", r.distance},
                   {"predicted_depth", r.predicted_depth}});
  }
  return out;
}

Json ToJson(const IdentitySuiteReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"cases", c.cases},
                      {"max_residual", c.max_residual},
                      {"threshold", c.threshold},
                      {"pass", c.Passes()}});
  }
  return {{"seed", report.seed}, {"checks", checks}, {"all_pass", report.AllPass()}};
}

std::string Dump(const Json& json) { return json.dump(2); }

void WriteReportsCsv(const std::vector<CorrelationReport>& reports, std::ostream& out) {
  out << "tuple,T,H_direct,H_spectral,main_term,error_direct,error_spectral,"
         "error_main_term,scaled_H_direct,scaled_main_term,routes_agree\n";
  for (const auto& r : reports) {
    out << '"' << r.tuple.ToString() << '"' << ',' << FormatReal(r.T) << ','
        << FormatReal(r.H_direct) << ',' << FormatReal(r.H_spectral) << ','
        << FormatReal(r.main_term) << ',' << FormatReal(r.error_direct) << ','
        << FormatReal(r.error_spectral) << ',' << FormatReal(r.error_main_term) << ','
        << FormatReal(r.ScaledDirect()) << ',' << FormatReal(r.ScaledMainTerm()) << ','
        << (r.RoutesAgree() ? "true" : "false") << '\n';
  }
}

}  // namespace zetacorr
