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

#include "dephase/qstate.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace dephase {
namespace {

void require_width(int width, int max_width, const char* what) {
  if (width < 1 || width > max_width) {
    throw std::invalid_argument(std::string(what) + " width must be in [1, " +
                                std::to_string(max_width) + "], got " + std::to_string(width));
  }
}

Eigen::Index dim_of(int width) { return Eigen::Index{1} << width; }

}  // namespace

QState::QState(int width, Eigen::VectorXcd amplitudes)
    : width_(width), amplitudes_(std::move(amplitudes)) {
  require_width(width, kMaxStateWidth, "state");
  if (amplitudes_.size() != dim_of(width)) {
    throw std::invalid_argument("state of width " + std::to_string(width) + " needs " +
                                std::to_string(dim_of(width)) + " amplitudes, got " +
                                std::to_string(amplitudes_.size()));
  }
}

QState QState::zero(int width) {
  require_width(width, kMaxStateWidth, "state");
  return QState(width, Eigen::VectorXcd::Zero(dim_of(width)));
}

QState QState::basis(int width, std::uint64_t index) {
  QState out = zero(width);
  if (index >= out.dimension()) {
    throw std::invalid_argument("basis index " + std::to_string(index) + " out of range");
  }
  out.amplitudes_[static_cast<Eigen::Index>(index)] = 1.0;
  return out;
}

QState QState::from_amplitudes(int width, const std::vector<Complex>& amplitudes) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(amplitudes.size()));
  for (std::size_t i = 0; i < amplitudes.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] = amplitudes[i];
  }
  return QState(width, std::move(v));
}

Complex QState::amplitude(std::uint64_t index) const {
  return amplitudes_[static_cast<Eigen::Index>(index)];
}

bool QState::is_normalized(double tolerance) const {
  return std::abs(norm_squared() - 1.0) <= tolerance;
}

QState QState::normalized() const {
  const double n = amplitudes_.norm();
  if (n == 0.0) {
    throw std::domain_error("cannot normalize the zero vector");
  }
  return QState(width_, amplitudes_ / n);
}

Complex QState::inner(const QState& other) const {
  if (other.width_ != width_) {
    throw std::invalid_argument("inner product of states with different widths");
  }
  return amplitudes_.dot(other.amplitudes_);
}

DensityMatrix::DensityMatrix(int width, Eigen::MatrixXcd entries)
    : width_(width), entries_(std::move(entries)) {
  require_width(width, kMaxDensityWidth, "density matrix");
  if (entries_.rows() != dim_of(width) || entries_.cols() != dim_of(width)) {
    throw std::invalid_argument("density matrix of width " + std::to_string(width) +
                                " must be " + std::to_string(dim_of(width)) + " square");
  }
}

DensityMatrix DensityMatrix::zero(int width) {
  require_width(width, kMaxDensityWidth, "density matrix");
  return DensityMatrix(width, Eigen::MatrixXcd::Zero(dim_of(width), dim_of(width)));
}

Complex DensityMatrix::entry(std::uint64_t row, std::uint64_t col) const {
  return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
}

bool DensityMatrix::is_hermitian(double tolerance) const {
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

bool DensityMatrix::is_positive_semidefinite(double slack) const {
  // Symmetrize first; the eigensolver only reads one triangle.
  const Eigen::MatrixXcd h = (entries_ + entries_.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -slack;
}

DensityMatrix DensityMatrix::renormalized() const {
  const double t = trace();
  if (t == 0.0) {
    throw std::domain_error("cannot renormalize a density matrix with zero trace");
  }
  return DensityMatrix(width_, entries_ / t);
}

DensityMatrix pure_to_density(const QState& psi) {
  require_width(psi.width(), kMaxDensityWidth, "density matrix");
  return DensityMatrix(psi.width(), psi.amplitudes() * psi.amplitudes().adjoint());
}

double overlap_probability(const QState& alpha, const DensityMatrix& rho) {
  if (alpha.width() != rho.width()) {
    throw std::invalid_argument("overlap_probability: width mismatch");
  }
  if (!alpha.is_normalized(tol::kInputNorm)) {
    throw std::invalid_argument("overlap_probability: alpha must be normalized");
  }
  const Complex value = alpha.amplitudes().dot(rho.entries() * alpha.amplitudes());
  return std::max(0.0, value.real());
}

DensityMatrix project_keep(const DensityMatrix& rho, std::span<const BitString> keep) {
  if (keep.empty()) {
    throw std::invalid_argument("project_keep: empty basis list");
  }
  std::vector<bool> kept(rho.dimension(), false);
  for (const BitString& b : keep) {
    if (b.width() != rho.width()) {
      throw std::invalid_argument("project_keep: basis state width mismatch");
    }
    kept[b.value()] = true;
  }
  const Eigen::Index dim = static_cast<Eigen::Index>(rho.dimension());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    if (!kept[static_cast<std::size_t>(col)]) continue;
    for (Eigen::Index row = 0; row < dim; ++row) {
      if (kept[static_cast<std::size_t>(row)]) out(row, col) = rho.entries()(row, col);
    }
  }
  return DensityMatrix(rho.width(), std::move(out));
}

double qubit_fidelity(const DensityMatrix& rho, const QState& psi0) {
  if (rho.width() != 1 || psi0.width() != 1) {
    throw std::invalid_argument("qubit_fidelity: both arguments must be single-qubit");
  }
  return psi0.amplitudes().dot(rho.entries() * psi0.amplitudes()).real();
}

}  // namespace dephase
