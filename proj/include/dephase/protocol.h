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

#ifndef DEPHASE_PROTOCOL_H
#define DEPHASE_PROTOCOL_H

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include <Eigen/Dense>

#include "dephase/codes.h"
#include "dephase/qstate.h"

namespace dephase {

struct PhaseDamping {
  double lambda = 0.0;  // channel exponent per round
};

struct AmplitudeDamping {
  double gamma = 0.0;  // decay probability per qubit per round
};

using ChannelSpec = std::variant<PhaseDamping, AmplitudeDamping>;

std::string channel_name(const ChannelSpec& channel);
double channel_parameter(const ChannelSpec& channel);

/// Prepare c0|0> + c1|1>, encode, send through the channel, decode, keep the
/// run only if every ancilla reads 0. With rounds > 1 the accepted qubit is
/// re-encoded onto fresh ancilla and sent again, each round with the full
/// per-round channel.
struct ProtocolRun {
  std::shared_ptr<const Code> code;
  ChannelSpec channel = PhaseDamping{};
  Complex c0 = 1.0;
  Complex c1 = 0.0;
  int rounds = 1;
};

struct ProtocolReport {
  std::string code_name;
  int width = 0;
  std::string channel;
  double channel_parameter = 0.0;
  int rounds = 1;
  Complex c0;
  Complex c1;

  double p_accept_measured = 0.0;
  std::optional<double> p_accept_closed_form;
  /// Accepted logical qubit, trace 1. Zero when degenerate.
  Eigen::Matrix2cd rho5 = Eigen::Matrix2cd::Zero();
  /// rho5(0,1) / (c0 c1^*). Empty when c0 c1 = 0 or the run is degenerate.
  std::optional<Complex> j_measured;
  std::optional<double> j_closed_form;
  /// <psi0|rho5|psi0>; NaN when degenerate.
  double fidelity_measured = 0.0;
  std::optional<double> fidelity_closed_form;
  /// Set when the acceptance probability is zero.
  bool degenerate = false;
};

/// Outcome of one encode / transmit / decode / post-select round.
struct RoundOutcome {
  double p_accept;
  /// (e0, e1) block of the decoded, projected state before renormalization.
  Eigen::Matrix2cd accepted_block;
};

RoundOutcome transmit_round(const Code& code, const ChannelSpec& channel,
                            const Eigen::Matrix2cd& qubit);

/// Throws std::invalid_argument unless run.rounds == 1.
ProtocolReport run_once(const ProtocolRun& run);
ProtocolReport run_periodic(const ProtocolRun& run);
/// Amplitude-damping transmission through the symmetric code.
ProtocolReport run_amplitude(const ProtocolRun& run);

struct ClosedForms {
  std::optional<double> p_accept;
  std::optional<double> j;
  std::optional<double> fidelity;
};

/// Predictions for the given configuration where a formula exists: symmetric
/// code under phase damping (single-shot and k-round), the bare qubit, the
/// two-qubit code (single round, published expressions), and the symmetric
/// code under amplitude damping.
ClosedForms closed_forms(const Code& code, const ChannelSpec& channel, double c0sq, int rounds);

struct MonteCarloEstimate {
  double mean;
  double standard_error;
  std::uint64_t samples;
};

/// Estimates the single-round acceptance probability under phase damping by
/// sampling trajectory branches of the encoded state and then Bob's
/// projective measurement on each sampled pure state. Branches come from a
/// BranchSampler seeded with `seed`; accept/reject draws use a second
/// std::mt19937_64 seeded with seed ^ 0x9e3779b97f4a7c15.
MonteCarloEstimate sample_acceptance(const Code& code, double lambda, Complex c0, Complex c1,
                                     std::uint64_t samples, std::uint64_t seed);

}  // namespace dephase

#endif  // DEPHASE_PROTOCOL_H
