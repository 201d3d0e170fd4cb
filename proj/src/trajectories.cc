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

#include "dephase/trajectories.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "dephase/bitstring.h"

namespace dephase {

double TrajectoryBranch::weight() const {
  double w = 0.0;
  for (const auto& [index, amp] : terms) w += std::norm(amp);
  return w;
}

TrajectoryEnsemble::TrajectoryEnsemble(QState source, double lambda,
                                       std::vector<TrajectoryBranch> branches)
    : source_(std::move(source)), lambda_(lambda), branches_(std::move(branches)) {
  if (branches_.size() != source_.dimension()) {
    throw std::invalid_argument("trajectory ensemble needs one branch per basis label");
  }
}

const TrajectoryBranch& TrajectoryEnsemble::branch(std::uint64_t n) const {
  if (n >= branches_.size()) {
    throw std::out_of_range("branch label out of range");
  }
  return branches_[n];
}

QState TrajectoryEnsemble::dense_branch(std::uint64_t n) const {
  QState out = QState::zero(width());
  Eigen::VectorXcd v = out.amplitudes();
  for (const auto& [index, amp] : branch(n).terms) v[static_cast<Eigen::Index>(index)] = amp;
  return QState(width(), std::move(v));
}

DensityMatrix TrajectoryEnsemble::gram_sum() const {
  DensityMatrix zero = DensityMatrix::zero(width());
  Eigen::MatrixXcd m = zero.entries();
  for (const TrajectoryBranch& br : branches_) {
    for (const auto& [row, a] : br.terms) {
      for (const auto& [col, b] : br.terms) {
        m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) += a * std::conj(b);
      }
    }
  }
  return DensityMatrix(width(), std::move(m));
}

double TrajectoryEnsemble::overlap_probability(const QState& alpha) const {
  if (alpha.width() != width()) {
    throw std::invalid_argument("overlap_probability: width mismatch");
  }
  double total = 0.0;
  for (const TrajectoryBranch& br : branches_) {
    Complex overlap = 0.0;
    for (const auto& [index, amp] : br.terms) overlap += std::conj(alpha.amplitude(index)) * amp;
    total += std::norm(overlap);
  }
  return total;
}

TrajectoryEnsemble decompose(const QState& psi, double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("decompose: lambda must be finite and >= 0");
  }
  if (!psi.is_normalized(tol::kInputNorm)) {
    throw std::invalid_argument("decompose: source state must be normalized");
  }
  const int width = psi.width();
  const double no_jump = std::exp(-lambda);
  const double jump = std::sqrt(-std::expm1(-2.0 * lambda));

  std::vector<TrajectoryBranch> branches(psi.dimension());
  for (std::uint64_t n = 0; n < branches.size(); ++n) branches[n].label = n;

  // Basis state b feeds branch 0 and every branch n whose bits lie inside b.
  // Each qubit set in b contributes e^{-lambda} if it did not jump and
  // sqrt(1 - e^{-2 lambda}) if it did; the exponent h(n, b) counts the former.
  std::vector<double> no_jump_pow(static_cast<std::size_t>(width) + 1);
  std::vector<double> jump_pow(static_cast<std::size_t>(width) + 1);
  for (int i = 0; i <= width; ++i) {
    no_jump_pow[static_cast<std::size_t>(i)] = std::pow(no_jump, i);
    jump_pow[static_cast<std::size_t>(i)] = std::pow(jump, i);
  }
  for (std::uint64_t b = 0; b < psi.dimension(); ++b) {
    const Complex c = psi.amplitude(b);
    if (c == Complex(0.0)) continue;
    const int hb = hamming_weight(b);
    branches[0].terms.emplace_back(b, c * no_jump_pow[static_cast<std::size_t>(hb)]);
    // Enumerate nonzero submasks n of b.
    for (std::uint64_t n = b; n != 0; n = (n - 1) & b) {
      assert(is_jump_subset(n, b));
      const int jumped = hamming_weight(n & b);
      const int stayed = hamming_distance(n, b);
      const Complex amp = c * no_jump_pow[static_cast<std::size_t>(stayed)] *
                          jump_pow[static_cast<std::size_t>(jumped)];
      branches[n].terms.emplace_back(b, amp);
    }
  }
  return TrajectoryEnsemble(psi, lambda, std::move(branches));
}

std::vector<double> branch_weights(const TrajectoryEnsemble& ensemble) {
  std::vector<double> out(ensemble.size());
  for (std::uint64_t n = 0; n < out.size(); ++n) out[n] = ensemble.branch(n).weight();
  return out;
}

double uniform_unit(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

BranchSampler::BranchSampler(const TrajectoryEnsemble& ensemble, std::uint64_t seed)
    : ensemble_(&ensemble), engine_(seed) {
  const std::vector<double> weights = branch_weights(ensemble);
  cumulative_.resize(weights.size());
  double running = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    running += weights[i];
    cumulative_[i] = running;
  }
  assert(running > 0.0 && "all-zero branch weights");
  if (!(running > 0.0)) {
    throw std::logic_error("branch sampler: all branch weights are zero");
  }
}

std::uint64_t BranchSampler::next_label() {
  const double target = uniform_unit(engine_) * cumulative_.back();
  // upper_bound never lands on a zero-weight label: those repeat the
  // cumulative value of their predecessor.
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
  if (it == cumulative_.end()) {
    it = std::lower_bound(cumulative_.begin(), cumulative_.end(), cumulative_.back());
  }
  return static_cast<std::uint64_t>(it - cumulative_.begin());
}

BranchSample BranchSampler::next() {
  const std::uint64_t n = next_label();
  return BranchSample{n, ensemble_->dense_branch(n).normalized()};
}

BranchSample sample_branch(const TrajectoryEnsemble& ensemble, std::uint64_t seed) {
  BranchSampler sampler(ensemble, seed);
  return sampler.next();
}

}  // namespace dephase
