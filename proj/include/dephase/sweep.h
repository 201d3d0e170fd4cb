// Copyright 2026 The Dephase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DEPHASE_SWEEP_H
#define DEPHASE_SWEEP_H

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "dephase/codes.h"
#include "dephase/protocol.h"

namespace dephase::cli {

/// Malformed configuration; maps to exit status 2.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Configuration that is well formed but too large to simulate.
struct CapacityError : ConfigError {
  using ConfigError::ConfigError;
};

struct AmplitudeChoice {
  double c0sq = 0.5;
  double phase = 0.0;  // relative phase of c1, radians

  Complex c0() const;
  Complex c1() const;
};

struct SweepConfig {
  std::vector<std::string> codes{"symmetric:4"};
  std::string channel = "phase";
  std::vector<double> parameters{0.1};
  std::vector<AmplitudeChoice> amplitudes{AmplitudeChoice{}};
  std::vector<int> rounds{1};
  std::uint64_t seed = 1;
  std::string out;
  unsigned workers = 0;  // 0 = hardware concurrency
};

/// "standard", "two_qubit", "symmetric:4", "symmetric:4,6,8" or
/// "symmetric:2..10" (even widths in the range).
std::vector<std::string> parse_code_selector(const std::string& text);

std::vector<double> parse_number_list(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

/// Comma-separated entries, each one of
///   <c0sq>            c1 real and nonnegative
///   <c0sq>@<phase>    c1 = sqrt(1 - c0sq) e^{i phase}
///   uniform-grid:<m>  c0sq = i / (m + 1), i = 1..m
///   random:<m>        m draws of (c0sq, phase) from std::mt19937_64(seed)
std::vector<AmplitudeChoice> parse_amplitudes(const std::string& text, std::uint64_t seed);

/// Builds a code from its name. Throws CapacityError for symmetric widths that
/// are odd or beyond kMaxSymmetricCodeWidth.
std::shared_ptr<const Code> make_code(const std::string& name);

/// "key = value" lines; '#' starts a comment.
std::map<std::string, std::string> read_config_file(const std::string& path);

/// Validates and runs every grid point. Rows come back in grid order
/// (code, channel parameter, amplitude, rounds) independent of worker count.
std::vector<ProtocolReport> run_sweep(const SweepConfig& config);

std::string csv_header();
std::string csv_row(const ProtocolReport& report);
std::string to_csv(const std::vector<ProtocolReport>& reports);

/// Shortest-round-trip-safe decimal rendering (17 significant digits), "nan"
/// for missing values.
std::string format_double(double value);

struct FormulaDelta {
  std::string formula;
  std::size_t rows = 0;
  double max_abs_delta = 0.0;
  bool within_tolerance = true;
  /// Set for published expressions known not to match the simulation.
  std::string note;
};

std::vector<FormulaDelta> summarize(const std::vector<ProtocolReport>& reports,
                                    double tolerance = 1e-9);
std::string format_summary(const std::vector<FormulaDelta>& deltas, double tolerance = 1e-9);

}  // namespace dephase::cli

#endif  // DEPHASE_SWEEP_H
