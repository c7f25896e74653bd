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

#include "zetacorr/experiment_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>

#include "zetacorr/error.hpp"

namespace zetacorr {
namespace {

std::string Trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

std::string AtLine(std::size_t line) { return " (line " + std::to_string(line) + ")"; }

double ParseReal(const std::string& text, std::size_t line) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw InvalidArgument("config: expected a number, got '" + text + "'" + AtLine(line));
  }
  return value;
}

std::uint64_t ParseCount(const std::string& text, std::size_t line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidArgument("config: expected a non-negative integer, got '" + text + "'" +
                          AtLine(line));
  }
  return value;
}

double Positive(double value, const std::string& key, std::size_t line) {
  if (!(value > 0.0)) throw InvalidArgument("config: " + key + " must be positive" + AtLine(line));
  return value;
}

}  // namespace

ExperimentConfig ParseExperimentConfig(std::istream& in) {
  ExperimentConfig cfg;
  double c = cfg.h.c();
  double s = cfg.h.s();
  std::string family = ToString(cfg.h.family());
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = Trim(raw);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw InvalidArgument("config: expected key = value" + AtLine(line));
    }
    const std::string key = Trim(text.substr(0, eq));
    const std::string value = Trim(text.substr(eq + 1));
    if (key == "zeros_path") {
      cfg.zeros_path = value;
    } else if (key == "output_dir") {
      cfg.output_dir = value;
    } else if (key == "tuple") {
      try {
        cfg.tuples.push_back(CoefficientTuple::Parse(value));
      } catch (const Error& e) {
        throw InvalidArgument(std::string(e.what()) + AtLine(line));
      }
    } else if (key == "T") {
      std::size_t start = 0;
      while (start <= value.size()) {
        const auto comma = value.find(',', start);
        const auto item = Trim(value.substr(start, comma - start));
        cfg.T_list.push_back(Positive(ParseReal(item, line), "T", line));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    } else if (key == "h.family") {
      family = value;
    } else if (key == "h.c") {
      c = ParseReal(value, line);
    } else if (key == "h.s") {
      s = ParseReal(value, line);
    } else if (key == "tolerance.series") {
      cfg.series_tolerance = Positive(ParseReal(value, line), key, line);
    } else if (key == "tolerance.quadrature") {
      cfg.quadrature_tolerance = Positive(ParseReal(value, line), key, line);
    } else if (key == "tolerance.spectral") {
      cfg.spectral_tolerance = Positive(ParseReal(value, line), key, line);
    } else if (key == "threads") {
      cfg.threads = static_cast<unsigned>(std::max<std::uint64_t>(1, ParseCount(value, line)));
    } else if (key == "sieve_limit") {
      cfg.sieve_limit = ParseCount(value, line);
    } else {
      throw InvalidArgument("config: unknown key '" + key + "'" + AtLine(line));
    }
  }
  ParseTestFunctionFamily(family);
  cfg.h = TestFunction::GaussianTriplet(c, s);
  return cfg;
}

ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path.string() + "'");
  return ParseExperimentConfig(in);
}

}  // namespace zetacorr
