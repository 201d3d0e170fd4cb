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

#ifndef DEPHASE_VERIFY_H
#define DEPHASE_VERIFY_H

#include <cstdint>
#include <string>
#include <vector>

namespace dephase::cli {

struct CheckResult {
  std::string name;
  bool passed = true;
  double max_delta = 0.0;
  double tolerance = 0.0;
  /// First failing tuple, or an informational remark.
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
};

/// Runs the invariant suite: bit-string identities, trajectory
/// reconstruction, closed-form equivalence, fidelity bound, baseline
/// crossover, watchdog scaling, two-qubit code, amplitude-damping detection,
/// Monte Carlo acceptance, encoder-completion independence. Deterministic for
/// a fixed seed.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

/// One line per check; verbose adds max deltas and remarks.
std::string format_checks(const std::vector<CheckResult>& checks, bool verbose);

}  // namespace dephase::cli

#endif  // DEPHASE_VERIFY_H
