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

#include "dephase/channels.h"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace dephase {
namespace {

void require_width_match(int channel_width, const DensityMatrix& rho) {
  if (channel_width != rho.width()) {
    throw std::invalid_argument("channel width " + std::to_string(channel_width) +
                                " does not match density matrix width " +
                                std::to_string(rho.width()));
  }
}

}  // namespace

PhaseDampingChannel::PhaseDampingChannel(double lambda, int width)
    : lambda_(lambda), width_(width) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("phase damping lambda must be finite and >= 0");
  }
  if (width < 1 || width > kMaxDensityWidth) {
    throw std::invalid_argument("phase damping width out of range");
  }
}

DensityMatrix PhaseDampingChannel::apply(const DensityMatrix& rho) const {
  require_width_match(width_, rho);
  // decay[d] = exp(-lambda * d) for every possible Hamming distance d.
  std::vector<double> decay(static_cast<std::size_t>(width_) + 1);
  for (int d = 0; d <= width_; ++d) {
    decay[static_cast<std::size_t>(d)] = std::exp(-lambda_ * d);
  }
  Eigen::MatrixXcd out = rho.entries();
  const auto dim = static_cast<std::uint64_t>(rho.dimension());
  for (std::uint64_t col = 0; col < dim; ++col) {
    for (std::uint64_t row = 0; row < dim; ++row) {
      out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) *=
          decay[static_cast<std::size_t>(hamming_distance(row, col))];
    }
  }
  return DensityMatrix(width_, std::move(out));
}

AmplitudeDampingChannel::AmplitudeDampingChannel(double gamma, int width)
    : gamma_(gamma), width_(width) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("amplitude damping gamma must lie in [0, 1]");
  }
  if (width < 1 || width > kMaxDensityWidth) {
    throw std::invalid_argument("amplitude damping width out of range");
  }
}

DensityMatrix AmplitudeDampingChannel::apply(const DensityMatrix& rho) const {
  require_width_match(width_, rho);
  const double keep = std::sqrt(1.0 - gamma_);
  const auto dim = static_cast<std::uint64_t>(rho.dimension());
  Eigen::MatrixXcd cur = rho.entries();
  for (int q = 0; q < width_; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    Eigen::MatrixXcd next = Eigen::MatrixXcd::Zero(cur.rows(), cur.cols());
    for (std::uint64_t col = 0; col < dim; ++col) {
      for (std::uint64_t row = 0; row < dim; ++row) {
        const Complex v = cur(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
        const int excited = ((row & bit) ? 1 : 0) + ((col & bit) ? 1 : 0);
        // K0 rho K0^dagger
        next(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) +=
            excited == 0 ? v : (excited == 1 ? keep * v : (1.0 - gamma_) * v);
        // K1 rho K1^dagger moves the |1><1| block of qubit q onto |0><0|.
        if (excited == 2) {
          next(static_cast<Eigen::Index>(row & ~bit), static_cast<Eigen::Index>(col & ~bit)) +=
              gamma_ * v;
        }
      }
    }
    cur = std::move(next);
  }
  return DensityMatrix(width_, std::move(cur));
}

DensityMatrix apply_phase_damping(const PhaseDampingChannel& channel, const DensityMatrix& rho) {
  return channel.apply(rho);
}

DensityMatrix apply_amplitude_damping(const AmplitudeDampingChannel& channel,
                                      const DensityMatrix& rho) {
  return channel.apply(rho);
}

}  // namespace dephase
