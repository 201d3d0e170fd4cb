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

#ifndef DEPHASE_TRAJECTORIES_H
#define DEPHASE_TRAJECTORIES_H

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "dephase/qstate.h"

namespace dephase {

/// One unnormalized branch |phi_n> of the unravelled phase-damping channel,
/// stored as its nonzero (basis index, amplitude) terms in increasing index
/// order.
struct TrajectoryBranch {
  std::uint64_t label = 0;
  std::vector<std::pair<std::uint64_t, Complex>> terms;

  double weight() const;
};

/// The family {|phi_n>}, n in [0, 2^N), of a phase-damped pure state. Branch 0
/// is the no-jump evolution; branch n >= 1 is a jump on exactly the qubits set
/// in n.
class TrajectoryEnsemble {
 public:
  TrajectoryEnsemble(QState source, double lambda, std::vector<TrajectoryBranch> branches);

  const QState& source() const { return source_; }
  double lambda() const { return lambda_; }
  int width() const { return source_.width(); }
  std::size_t size() const { return branches_.size(); }

  const TrajectoryBranch& branch(std::uint64_t n) const;
  QState dense_branch(std::uint64_t n) const;

  /// sum_n |phi_n><phi_n|
  DensityMatrix gram_sum() const;

  /// sum_n |<alpha|phi_n>|^2
  double overlap_probability(const QState& alpha) const;

 private:
  QState source_;
  double lambda_;
  std::vector<TrajectoryBranch> branches_;
};

/// Throws std::invalid_argument if psi is not normalized or lambda < 0.
TrajectoryEnsemble decompose(const QState& psi, double lambda);

/// p_n = <phi_n|phi_n>.
std::vector<double> branch_weights(const TrajectoryEnsemble& ensemble);

struct BranchSample {
  std::uint64_t label;
  QState state;  // normalized
};

/// Draws branches by inverse CDF over the weights. The generator is
/// std::mt19937_64 seeded with the given seed; each draw consumes one 64-bit
/// output u and uses (u >> 11) * 2^-53 as the uniform variate, so streams are
/// reproducible across standard libraries.
class BranchSampler {
 public:
  BranchSampler(const TrajectoryEnsemble& ensemble, std::uint64_t seed);

  BranchSample next();
  std::uint64_t next_label();

 private:
  const TrajectoryEnsemble* ensemble_;
  std::vector<double> cumulative_;
  std::mt19937_64 engine_;
};

/// Single draw from a fresh sampler with the given seed.
BranchSample sample_branch(const TrajectoryEnsemble& ensemble, std::uint64_t seed);

/// Uniform double in [0, 1) from one 64-bit engine output.
double uniform_unit(std::mt19937_64& engine);

}  // namespace dephase

#endif  // DEPHASE_TRAJECTORIES_H
