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

#ifndef DEPHASE_CHANNELS_H
#define DEPHASE_CHANNELS_H

#include "dephase/qstate.h"

namespace dephase {

/// Independent dephasing of every qubit. Entry (a, b) of the density matrix is
/// multiplied by exp(-lambda * h(a, b)); populations are untouched. lambda is
/// the accumulated exponent, so two applications compose additively.
class PhaseDampingChannel {
 public:
  PhaseDampingChannel(double lambda, int width);

  double lambda() const { return lambda_; }
  int width() const { return width_; }

  DensityMatrix apply(const DensityMatrix& rho) const;

 private:
  double lambda_;
  int width_;
};

/// Independent decay |1> -> |0> with probability gamma on every qubit, using
/// the Kraus pair K0 = diag(1, sqrt(1 - gamma)), K1 = sqrt(gamma) |0><1|.
class AmplitudeDampingChannel {
 public:
  AmplitudeDampingChannel(double gamma, int width);

  double gamma() const { return gamma_; }
  int width() const { return width_; }

  DensityMatrix apply(const DensityMatrix& rho) const;

 private:
  double gamma_;
  int width_;
};

DensityMatrix apply_phase_damping(const PhaseDampingChannel& channel, const DensityMatrix& rho);
DensityMatrix apply_amplitude_damping(const AmplitudeDampingChannel& channel,
                                      const DensityMatrix& rho);

}  // namespace dephase

#endif  // DEPHASE_CHANNELS_H
