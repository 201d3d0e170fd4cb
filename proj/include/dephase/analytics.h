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

#ifndef DEPHASE_ANALYTICS_H
#define DEPHASE_ANALYTICS_H

namespace dephase::analytics {

// Closed-form predictions for the coded transmission protocol. Every function
// throws std::invalid_argument outside its domain. N is the total number of
// qubits in the symmetric code (even, >= 2); lambda is the phase-damping
// exponent applied to each qubit.

/// 2/N + (1 - 2/N) e^{-2 lambda}
double p_accept_form(int n, double lambda);

/// N / (2 e^{2 lambda} - 2 + N)
double j_form(int n, double lambda);

/// Coherence factor of the unencoded qubit, e^{-lambda}.
double baseline_j_form(double lambda);

/// 1 - 2 |c0|^2 |c1|^2 (1 - J). Requires J in [0, 1] and c0sq + c1sq = 1.
double fidelity_form(double j, double c0sq, double c1sq);

/// Lower bound (1 + J) / 2 on fidelity_form over all amplitudes.
double fidelity_lower_bound(double j);

/// True iff the symmetric code keeps more coherence than the bare qubit,
/// i.e. N > 2 (1 + e^{lambda}).
bool beats_baseline(int n, double lambda);

struct WatchdogForms {
  double p_accept;
  double j;
};

/// k rounds of correction: [2/N + (1 - 2/N) e^{-x}]^k and [N / (2 e^x - 2 + N)]^k
/// with x = exponent_per_round exactly as written. A round whose channel
/// exponent is mu corresponds to exponent_per_round = 2 mu.
WatchdogForms watchdog_forms(int n, double exponent_per_round, int k);

struct QuadraticWatchdogForms {
  double j_unsliced;            // N / (2 (1 - k^2 eps) - 2 + N)
  double j_sliced;              // [N / (2 (1 - eps) - 2 + N)]^k
  double j_unsliced_expansion;  // 1 + 2 k^2 eps / N
  double j_sliced_expansion;    // 1 + 2 k eps / N
};

/// Error schedule 1 - eps t^2. The displayed expressions exceed 1 for eps > 0;
/// they are returned verbatim. Rejects k^2 eps >= 1.
QuadraticWatchdogForms quadratic_watchdog_forms(int n, double epsilon, int k);

struct TwoQubitForms {
  double p_accept;  // (1 + e^{-2 lambda}) / 2
  double fidelity;  // 1 - 2 |c0|^2 |c1|^2 / cosh(lambda), as published
};

TwoQubitForms two_qubit_forms(double lambda, double c0sq, double c1sq);

/// cosh from its exponential definition.
double cosh_exp(double x);

}  // namespace dephase::analytics

#endif  // DEPHASE_ANALYTICS_H
