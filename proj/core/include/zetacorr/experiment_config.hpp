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

#ifndef ZETACORR_EXPERIMENT_CONFIG_HPP_
#define ZETACORR_EXPERIMENT_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "zetacorr/coefficient_tuple.hpp"
#include "zetacorr/test_function.hpp"

namespace zetacorr {

/// Flat key = value experiment description. Recognised keys:
///
///   zeros_path, output_dir, threads, sieve_limit,
///   tuple (repeatable, e.g. "1,1,-2"), T (comma list, repeatable),
///   h.family, h.c, h.s,
///   tolerance.series, tolerance.quadrature, tolerance.spectral
///
/// '#' starts a comment line.
struct ExperimentConfig {
  std::filesystem::path zeros_path;
  std::vector<CoefficientTuple> tuples;
  std::vector<double> T_list;
  TestFunction h = TestFunction::GaussianTriplet(20.0, 2.0);
  double series_tolerance = 1e-2;
  double quadrature_tolerance = 1e-4;
  double spectral_tolerance = 1e-9;
  std::filesystem::path output_dir;
  unsigned threads = 1;
  std::uint64_t sieve_limit = 0;  ///< 0: derived from the tolerances
};

/// Every tuple is validated while parsing. Throws InvalidArgument naming the
/// line for malformed input or unknown keys.
ExperimentConfig ParseExperimentConfig(std::istream& in);

/// Throws IoError when the file cannot be read.
ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path);

}  // namespace zetacorr

#endif  // ZETACORR_EXPERIMENT_CONFIG_HPP_
