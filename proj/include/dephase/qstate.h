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

#ifndef DEPHASE_QSTATE_H
#define DEPHASE_QSTATE_H

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "dephase/bitstring.h"

namespace dephase {

using Complex = std::complex<double>;

inline constexpr int kMaxStateWidth = 20;
inline constexpr int kMaxDensityWidth = 12;

// Shared numerical tolerances.
namespace tol {
inline constexpr double kStructural = 1e-12;
inline constexpr double kHermitian = 1e-12;
inline constexpr double kPsdSlack = 1e-10;
inline constexpr double kTraceSlack = 1e-12;
// Caller-supplied amplitudes only need to be normalized to this precision.
inline constexpr double kInputNorm = 1e-9;
}  // namespace tol

/// Pure state on `width` qubits. Amplitudes are indexed by the integer value
/// of the basis label. Unnormalized states are allowed; the squared norm is the
/// branch weight.
class QState {
 public:
  QState(int width, Eigen::VectorXcd amplitudes);

  static QState zero(int width);
  static QState basis(int width, std::uint64_t index);
  static QState from_amplitudes(int width, const std::vector<Complex>& amplitudes);

  int width() const { return width_; }
  std::size_t dimension() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Complex amplitude(std::uint64_t index) const;

  double norm_squared() const { return amplitudes_.squaredNorm(); }
  bool is_normalized(double tolerance = tol::kStructural) const;
  QState normalized() const;

  /// <this|other>
  Complex inner(const QState& other) const;

 private:
  int width_;
  Eigen::VectorXcd amplitudes_;
};

/// 2^N x 2^N density matrix. May be sub-normalized after post-selection.
class DensityMatrix {
 public:
  DensityMatrix(int width, Eigen::MatrixXcd entries);

  static DensityMatrix zero(int width);

  int width() const { return width_; }
  std::size_t dimension() const { return static_cast<std::size_t>(entries_.rows()); }
  const Eigen::MatrixXcd& entries() const { return entries_; }
  Complex entry(std::uint64_t row, std::uint64_t col) const;

  double trace() const { return entries_.trace().real(); }
  bool is_hermitian(double tolerance = tol::kHermitian) const;
  /// Smallest eigenvalue >= -slack. Dense eigensolve; intended for tests and
  /// verification at small widths.
  bool is_positive_semidefinite(double slack = tol::kPsdSlack) const;
  /// Divides by the trace. Throws std::domain_error on a zero trace.
  DensityMatrix renormalized() const;

 private:
  int width_;
  Eigen::MatrixXcd entries_;
};

DensityMatrix pure_to_density(const QState& psi);

/// <alpha|rho|alpha>. Throws std::invalid_argument on width mismatch or an
/// unnormalized alpha.
double overlap_probability(const QState& alpha, const DensityMatrix& rho);

/// P rho P with P the projector onto the listed basis states. The trace of
/// the result is the probability of that measurement outcome.
DensityMatrix project_keep(const DensityMatrix& rho, std::span<const BitString> keep);

/// <psi0|rho|psi0> for single-qubit rho and psi0.
double qubit_fidelity(const DensityMatrix& rho, const QState& psi0);

}  // namespace dephase

#endif  // DEPHASE_QSTATE_H
