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

#include "dephase/protocol.h"

#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "dephase/analytics.h"
#include "dephase/channels.h"
#include "dephase/trajectories.h"

namespace dephase {
namespace {

constexpr double kDegenerateAcceptance = 1e-15;
constexpr double kImaginaryJ = 1e-10;

void validate(const ProtocolRun& run) {
  if (!run.code) throw std::invalid_argument("protocol run has no code");
  if (run.rounds < 1) throw std::invalid_argument("protocol run needs rounds >= 1");
  if (std::abs(std::norm(run.c0) + std::norm(run.c1) - 1.0) > tol::kInputNorm) {
    throw std::invalid_argument("protocol run needs |c0|^2 + |c1|^2 = 1");
  }
}

DensityMatrix apply_channel(const ChannelSpec& channel, const DensityMatrix& rho) {
  return std::visit(
      [&](const auto& c) -> DensityMatrix {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, PhaseDamping>) {
          return PhaseDampingChannel(c.lambda, rho.width()).apply(rho);
        } else {
          return AmplitudeDampingChannel(c.gamma, rho.width()).apply(rho);
        }
      },
      channel);
}

ProtocolReport simulate(const ProtocolRun& run) {
  validate(run);
  const Code& code = *run.code;

  ProtocolReport report;
  report.code_name = code.name();
  report.width = code.width();
  report.channel = channel_name(run.channel);
  report.channel_parameter = channel_parameter(run.channel);
  report.rounds = run.rounds;
  report.c0 = run.c0;
  report.c1 = run.c1;

  const Eigen::Vector2cd psi0(run.c0, run.c1);
  Eigen::Matrix2cd qubit = psi0 * psi0.adjoint();
  double p_total = 1.0;
  for (int round = 0; round < run.rounds; ++round) {
    const RoundOutcome outcome = transmit_round(code, run.channel, qubit);
    p_total *= outcome.p_accept;
    if (outcome.p_accept <= kDegenerateAcceptance) {
      report.degenerate = true;
      break;
    }
    qubit = outcome.accepted_block / outcome.p_accept;
  }

  report.p_accept_measured = p_total;
  const ClosedForms forms = closed_forms(code, run.channel, std::norm(run.c0), run.rounds);
  report.p_accept_closed_form = forms.p_accept;
  report.j_closed_form = forms.j;
  report.fidelity_closed_form = forms.fidelity;
  if (report.degenerate) {
    report.fidelity_measured = std::numeric_limits<double>::quiet_NaN();
    return report;
  }

  report.rho5 = qubit;
  report.fidelity_measured = psi0.dot(qubit * psi0).real();
  const Complex coherence = run.c0 * std::conj(run.c1);
  if (std::abs(coherence) > tol::kStructural) {
    const Complex j = qubit(0, 1) / coherence;
    if (std::holds_alternative<PhaseDamping>(run.channel) && std::abs(j.imag()) > kImaginaryJ) {
      throw std::logic_error("phase damping produced a complex coherence factor");
    }
    report.j_measured = j;
  }
  return report;
}

}  // namespace

std::string channel_name(const ChannelSpec& channel) {
  return std::holds_alternative<PhaseDamping>(channel) ? "phase" : "amplitude";
}

double channel_parameter(const ChannelSpec& channel) {
  if (const auto* p = std::get_if<PhaseDamping>(&channel)) return p->lambda;
  return std::get<AmplitudeDamping>(channel).gamma;
}

RoundOutcome transmit_round(const Code& code, const ChannelSpec& channel,
                            const Eigen::Matrix2cd& qubit) {
  const DensityMatrix encoded = code.encode_density(qubit);
  const DensityMatrix received = apply_channel(channel, encoded);
  const DensityMatrix decoded = code.decode_density(received);
  const std::array<BitString, 2> keep{BitString(kLogicalZeroSlot, code.width()),
                                      BitString(kLogicalOneSlot, code.width())};
  const DensityMatrix kept = project_keep(decoded, keep);
  RoundOutcome out;
  out.p_accept = kept.trace();
  out.accepted_block = kept.entries().topLeftCorner<2, 2>();
  return out;
}

ProtocolReport run_once(const ProtocolRun& run) {
  if (run.rounds != 1) throw std::invalid_argument("run_once expects a single round");
  return simulate(run);
}

ProtocolReport run_periodic(const ProtocolRun& run) { return simulate(run); }

ProtocolReport run_amplitude(const ProtocolRun& run) {
  validate(run);
  if (!std::holds_alternative<AmplitudeDamping>(run.channel)) {
    throw std::invalid_argument("run_amplitude expects an amplitude-damping channel");
  }
  if (run.code->family() != CodeFamily::kSymmetric) {
    throw std::invalid_argument("run_amplitude expects the symmetric code");
  }
  return simulate(run);
}

ClosedForms closed_forms(const Code& code, const ChannelSpec& channel, double c0sq, int rounds) {
  ClosedForms out;
  const double c1sq = 1.0 - c0sq;
  auto with_fidelity = [&](double j) {
    out.j = j;
    out.fidelity = analytics::fidelity_form(j, c0sq, c1sq);
  };
  if (const auto* phase = std::get_if<PhaseDamping>(&channel)) {
    switch (code.family()) {
      case CodeFamily::kSymmetric:
        if (rounds == 1) {
          out.p_accept = analytics::p_accept_form(code.width(), phase->lambda);
          with_fidelity(analytics::j_form(code.width(), phase->lambda));
        } else {
          const auto w = analytics::watchdog_forms(code.width(), 2.0 * phase->lambda, rounds);
          out.p_accept = w.p_accept;
          with_fidelity(w.j);
        }
        break;
      case CodeFamily::kStandard:
        out.p_accept = 1.0;
        with_fidelity(std::pow(analytics::baseline_j_form(phase->lambda), rounds));
        break;
      case CodeFamily::kTwoQubit:
        if (rounds == 1) {
          const auto t = analytics::two_qubit_forms(phase->lambda, c0sq, c1sq);
          out.p_accept = t.p_accept;
          out.fidelity = t.fidelity;
        }
        break;
      case CodeFamily::kCustom:
        break;
    }
  } else if (code.family() == CodeFamily::kSymmetric) {
    const double gamma = std::get<AmplitudeDamping>(channel).gamma;
    out.p_accept = std::pow(1.0 - gamma, rounds);
    with_fidelity(1.0);
  }
  return out;
}

MonteCarloEstimate sample_acceptance(const Code& code, double lambda, Complex c0, Complex c1,
                                     std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("sample_acceptance needs samples > 0");
  const TrajectoryEnsemble ensemble = decompose(encode(code, c0, c1), lambda);

  // Conditional acceptance probability of each normalized branch.
  std::vector<double> accept_given_branch(ensemble.size(), 0.0);
  for (std::uint64_t n = 0; n < ensemble.size(); ++n) {
    const TrajectoryBranch& br = ensemble.branch(n);
    const double w = br.weight();
    if (w == 0.0) continue;
    double p = 0.0;
    for (int bit = 0; bit < 2; ++bit) {
      Complex overlap = 0.0;
      for (const auto& [index, amp] : br.terms) {
        overlap += std::conj(code.logical(bit).amplitude(index)) * amp;
      }
      p += std::norm(overlap);
    }
    accept_given_branch[n] = p / w;
  }

  BranchSampler sampler(ensemble, seed);
  std::mt19937_64 measurement(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uint64_t accepted = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const std::uint64_t n = sampler.next_label();
    if (uniform_unit(measurement) < accept_given_branch[n]) ++accepted;
  }
  const double mean = static_cast<double>(accepted) / static_cast<double>(samples);
  const double se = std::sqrt(mean * (1.0 - mean) / static_cast<double>(samples));
  return {mean, se, samples};
}

}  // namespace dephase
