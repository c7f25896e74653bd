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

// zetacorr: command-line front end.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zetacorr/arithmetic.hpp"
#include "zetacorr/combinatorics.hpp"
#include "zetacorr/correlation.hpp"
#include "zetacorr/dips.hpp"
#include "zetacorr/error.hpp"
#include "zetacorr/experiment_config.hpp"
#include "zetacorr/identity_suite.hpp"
#include "zetacorr/quadrature.hpp"
#include "zetacorr/report_io.hpp"
#include "zetacorr/zeros.hpp"

namespace zc = zetacorr;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;
constexpr int kExitBudget = 4;

int ExitCode(zc::ErrorKind kind) {
  switch (kind) {
    case zc::ErrorKind::kDomain:
      return kExitDomain;
    case zc::ErrorKind::kBudget:
    case zc::ErrorKind::kResource:
      return kExitBudget;
    default:
      return kExitInput;
  }
}

std::filesystem::path ResolveZeros(const std::string& flag,
                                   const std::filesystem::path& from_config = {}) {
  if (!flag.empty()) return flag;
  if (!from_config.empty()) return from_config;
  if (const char* env = std::getenv("ZETA_ZEROS_PATH"); env && *env) return env;
  throw zc::InvalidArgument("no zero table given (use --zeros or set ZETA_ZEROS_PATH)");
}

std::vector<zc::CoefficientTuple> ParseTuples(const std::vector<std::string>& texts) {
  if (texts.empty()) return zc::DefaultFigureTuples();
  std::vector<zc::CoefficientTuple> out;
  for (const auto& t : texts) out.push_back(zc::CoefficientTuple::Parse(t));
  return out;
}

zc::MangoldtTable SieveFor(std::uint64_t required) {
  if (required > zc::kMaxSieveLimit) {
    throw zc::ResourceError("series needs terms up to " + std::to_string(required) +
                                ", above the sieve cap; loosen the tolerance",
                            static_cast<double>(required));
  }
  return zc::SieveMangoldt(required);
}

// Writes to the file when a path is given, otherwise to stdout.
void Emit(const std::string& path, const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw zc::IoError("cannot write '" + path + "'");
  write(out);
}

struct Globals {
  unsigned threads = 1;
};

int RunConstants(std::optional<int> r_max, const std::string& tuple_text, double tol) {
  zc::Json out;
  if (!tuple_text.empty()) {
    const auto a = zc::CoefficientTuple::Parse(tuple_text);
    double c = 0.0;
    double c_error = 0.0;
    zc::Json exact = nullptr;
    if (a.IsBalanced()) {
      const auto q = zc::CExactBalanced(static_cast<int>(a.S()));
      exact = q.ToString();
      c = q.ToDouble();
    } else {
      const auto result = zc::CConstant(a, tol);
      c = result.value;
      c_error = result.TotalError();
    }
    const double d = (a.m() % 2 == 0 ? 1.0 : -1.0) * c / std::pow(2.0 * std::numbers::pi, a.m());
    out = {{"tuple", zc::ToJson(a)}, {"m", a.m()}, {"S", a.S()},
           {"C", c},  {"C_error", c_error}, {"C_exact", exact}, {"D", d}};
  } else {
    const int top = r_max.value_or(5);
    if (top < 1) throw zc::InvalidArgument("constants: --r-max must be >= 1");
    zc::Json rows = zc::Json::array();
    for (int r = 1; r <= top; ++r) {
      const auto value = zc::COfR(r);
      rows.push_back({{"r", r}, {"c_pi_2r", value.ToString()}, {"value", value.ToDouble()}});
    }
    out = {{"c_of_r", rows}};
  }
  std::cout << zc::Dump(out) << '\n';
  return 0;
}

int RunKfun(const Globals& g, const std::vector<std::string>& tuples, double t_lo,
            double t_hi, double step, double tol, const std::string& output) {
  const auto list = ParseTuples(tuples);
  zc::SeriesConfig cfg{.tolerance = tol, .threads = g.threads};
  cfg.Validate();
  if (!(step > 0.0)) throw zc::InvalidArgument("kfun: --step must be positive");
  if (!(t_lo <= t_hi)) throw zc::InvalidArgument("kfun: need t-lo <= t-hi");
  const auto table = SieveFor(zc::RequiredSieveLimit(list, cfg));
  const auto curves = zc::Figure1Data(list, t_lo, t_hi, step, table, cfg);
  Emit(output, [&](std::ostream& out) { curves.WriteCsv(out); });
  return 0;
}

int RunDips(const Globals& g, const std::vector<std::string>& tuples, double t_lo,
            double t_hi, double step, double window, double tol,
            const std::string& zeros_flag, const std::string& output) {
  const auto list = ParseTuples(tuples);
  const auto zeros = zc::LoadZeros(ResolveZeros(zeros_flag));
  zc::SeriesConfig cfg{.tolerance = tol, .threads = g.threads};
  cfg.Validate();
  const auto table = SieveFor(zc::RequiredSieveLimit(list, cfg));
  zc::Json out = zc::Json::array();
  for (const auto& a : list) {
    auto records = zc::ScanMinima(a, t_lo, t_hi, step, table, cfg);
    records = zc::MatchToZeros(std::move(records), zeros, window);
    out.push_back({{"tuple", zc::ToJson(a)},
                   {"predicted_depth", zc::DipDepthPrediction(a.m(), a.S())},
                   {"records", zc::ToJson(records)}});
  }
  Emit(output, [&](std::ostream& os) { os << zc::Dump(out) << '\n'; });
  return 0;
}

int RunHsum(const Globals& g, const std::string& config_path, const std::string& zeros_flag) {
  const auto cfg = zc::LoadExperimentConfig(config_path);
  if (cfg.tuples.empty()) throw zc::InvalidArgument("hsum: config lists no tuple");
  if (cfg.T_list.empty()) throw zc::InvalidArgument("hsum: config lists no T");
  const auto zeros = zc::LoadZeros(ResolveZeros(zeros_flag, cfg.zeros_path));
  const unsigned threads = std::max(g.threads, cfg.threads);

  zc::MainTermConfig main_cfg;
  main_cfg.series.tolerance = cfg.series_tolerance;
  main_cfg.series.threads = threads;
  main_cfg.integral_tolerance = cfg.quadrature_tolerance;
  main_cfg.series.Validate();
  std::uint64_t limit = cfg.sieve_limit;
  if (limit == 0) limit = zc::RequiredSieveLimit(cfg.tuples, main_cfg.series);
  main_cfg.series.max_terms = std::min<std::uint64_t>(limit, zc::kMaxSieveLimit);
  const auto table = SieveFor(limit);

  zc::ReportOptions options;
  options.direct.threads = threads;
  options.spectral.threads = threads;
  options.spectral.tolerance = cfg.spectral_tolerance;

  std::vector<zc::CorrelationReport> reports;
  for (const auto& a : cfg.tuples) {
    const auto main = zc::ComputeMainTermParts(cfg.h, a, table, main_cfg);
    for (double T : cfg.T_list) {
      reports.push_back(zc::BuildReport(cfg.h, a, T, zeros, main, options));
    }
  }
  zc::Json out = zc::Json::array();
  bool agree = true;
  for (const auto& r : reports) {
    out.push_back(zc::ToJson(r));
    agree = agree && r.RoutesAgree();
  }
  if (cfg.output_dir.empty()) {
    std::cout << zc::Dump(out) << '\n';
  } else {
    std::filesystem::create_directories(cfg.output_dir);
    Emit((cfg.output_dir / "reports.json").string(),
         [&](std::ostream& os) { os << zc::Dump(out) << '\n'; });
    Emit((cfg.output_dir / "reports.csv").string(),
         [&](std::ostream& os) { zc::WriteReportsCsv(reports, os); });
  }
  if (!agree) {
    std::cerr << "zetacorr: route agreement violated for at least one report\n";
    return kExitViolation;
  }
  return 0;
}

int RunValidate(const std::string& zeros_flag) {
  const auto zeros = zc::LoadZeros(ResolveZeros(zeros_flag));
  for (const auto& w : zeros.warnings()) std::cerr << "zetacorr: warning: " << w << '\n';
  const auto report = zc::Validate(zeros);
  std::cout << zc::Dump(zc::ToJson(report)) << '\n';
  return report.AnyFlagged() ? kExitViolation : 0;
}

int RunIdentities(std::uint64_t seed, int iterations) {
  zc::IdentitySuiteOptions options;
  options.seed = seed;
  options.iterations = iterations;
  const auto report = zc::RunIdentitySuite(options);
  std::cout << zc::Dump(zc::ToJson(report)) << '\n';
  return report.AllPass() ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correlation sums over zeta-zero ordinates"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--threads", globals.threads, "Worker threads (results do not depend on it)")
      ->check(CLI::Range(1u, 1024u));

  auto* constants = app.add_subcommand("constants", "Exact c(r) table or C(m;a), D(m) for a tuple");
  std::optional<int> r_max;
  std::string constants_tuple;
  double constants_tol = 1e-10;
  constants->add_option("--r-max", r_max, "Print c(r)·π^{2r} for r = 1..r-max");
  constants->add_option("--tuple", constants_tuple, "Coefficient tuple, e.g. 1,1,-2");
  constants->add_option("--tolerance", constants_tol, "Quadrature tolerance for C(m;a)");

  std::vector<std::string> tuples;
  double t_lo = 10.0;
  double t_hi = 40.0;
  double step = 0.02;
  double series_tol = 5e-3;
  std::string output;
  std::string zeros_flag;

  auto* kfun = app.add_subcommand("kfun", "CSV of y(t;a) on a grid");
  kfun->add_option("--tuple", tuples, "Tuple (repeatable); default: the three figure tuples");
  kfun->add_option("--t-lo", t_lo);
  kfun->add_option("--t-hi", t_hi);
  kfun->add_option("--step", step);
  kfun->add_option("--tolerance", series_tol, "Series truncation tolerance");
  kfun->add_option("-o,--output", output, "Output file (default stdout)");

  auto* dips = app.add_subcommand("dips", "Local minima of y(t;a) matched to zero ordinates");
  double window = 0.5;
  dips->add_option("--tuple", tuples, "Tuple (repeatable); default: the three figure tuples");
  dips->add_option("--t-lo", t_lo);
  dips->add_option("--t-hi", t_hi);
  dips->add_option("--step", step);
  dips->add_option("--window", window, "Matching window");
  dips->add_option("--tolerance", series_tol, "Series truncation tolerance");
  dips->add_option("--zeros", zeros_flag, "Zero table (default $ZETA_ZEROS_PATH)");
  dips->add_option("-o,--output", output, "Output file (default stdout)");

  auto* hsum = app.add_subcommand("hsum", "Correlation reports for an experiment config");
  std::string config_path;
  hsum->add_option("config", config_path, "Experiment config file")->required();
  hsum->add_option("--zeros", zeros_flag, "Zero table (overrides the config)");

  auto* validate = app.add_subcommand("validate-zeros", "Check a zero table against N(T)");
  validate->add_option("zeros", zeros_flag, "Zero table (default $ZETA_ZEROS_PATH)");

  auto* identities = app.add_subcommand("identities", "Randomized identity suite");
  std::uint64_t seed = 42;
  int iterations = 200;
  identities->add_option("--seed", seed);
  identities->add_option("--iters", iterations)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*constants) return RunConstants(r_max, constants_tuple, constants_tol);
    if (*kfun) return RunKfun(globals, tuples, t_lo, t_hi, step, series_tol, output);
    if (*dips) {
      return RunDips(globals, tuples, t_lo, t_hi, step, window, series_tol, zeros_flag, output);
    }
    if (*hsum) return RunHsum(globals, config_path, zeros_flag);
    if (*validate) return RunValidate(zeros_flag);
    if (*identities) return RunIdentities(seed, iterations);
  } catch (const zc::Error& e) {
    std::cerr << "zetacorr: " << zc::ToString(e.kind()) << ": " << e.what() << '\n';
    return ExitCode(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "zetacorr: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
