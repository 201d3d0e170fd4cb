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

#include "dephase/codes.h"

#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dephase/bitstring.h"

namespace dephase {
namespace {

using SparseVector = std::vector<std::pair<std::uint64_t, Complex>>;

SparseVector to_sparse(const QState& psi) {
  SparseVector out;
  for (std::uint64_t i = 0; i < psi.dimension(); ++i) {
    const Complex a = psi.amplitude(i);
    if (a != Complex(0.0)) out.emplace_back(i, a);
  }
  return out;
}

// Completes {zero, one} to an orthonormal basis by classical Gram-Schmidt with
// one reorthogonalization pass, feeding basis vectors in the given order and
// dropping those that are dependent on the vectors already accepted. Vectors
// are sparse, and an index -> owner table restricts each projection to the
// accepted vectors whose support meets the residual.
std::vector<SparseVector> complete_basis(const QState& zero, const QState& one,
                                         CompletionOrder order) {
  const std::uint64_t dim = zero.dimension();
  std::vector<SparseVector> accepted{to_sparse(zero), to_sparse(one)};
  std::vector<std::vector<std::size_t>> owners(dim);
  auto register_vector = [&](std::size_t id) {
    for (const auto& [index, amp] : accepted[id]) owners[index].push_back(id);
  };
  register_vector(0);
  register_vector(1);

  constexpr double kDependent = 1e-8;
  constexpr double kPrune = 1e-15;
  for (std::uint64_t step = 0; step < dim; ++step) {
    const std::uint64_t k = order == CompletionOrder::kAscending ? step : dim - 1 - step;
    std::map<std::uint64_t, Complex> residual{{k, Complex(1.0)}};
    for (int pass = 0; pass < 2; ++pass) {
      std::set<std::size_t> touching;
      for (const auto& [index, amp] : residual) {
        touching.insert(owners[index].begin(), owners[index].end());
      }
      std::vector<std::pair<std::size_t, Complex>> coefficients;
      for (std::size_t id : touching) {
        Complex c = 0.0;
        for (const auto& [index, amp] : accepted[id]) {
          if (auto it = residual.find(index); it != residual.end()) c += std::conj(amp) * it->second;
        }
        coefficients.emplace_back(id, c);
      }
      for (const auto& [id, c] : coefficients) {
        for (const auto& [index, amp] : accepted[id]) residual[index] -= c * amp;
      }
    }
    double norm_sq = 0.0;
    for (const auto& [index, amp] : residual) norm_sq += std::norm(amp);
    const double norm = std::sqrt(norm_sq);
    if (norm < kDependent) continue;
    SparseVector v;
    for (const auto& [index, amp] : residual) {
      if (std::abs(amp) / norm > kPrune) v.emplace_back(index, amp / norm);
    }
    accepted.push_back(std::move(v));
    register_vector(accepted.size() - 1);
  }
  if (accepted.size() != dim) {
    throw std::logic_error("encoder completion produced " + std::to_string(accepted.size()) +
                           " vectors for dimension " + std::to_string(dim));
  }
  return accepted;
}

SparseUnitary build_encoder(const QState& zero, const QState& one, CompletionOrder order) {
  const std::vector<SparseVector> columns = complete_basis(zero, one, order);
  const auto dim = static_cast<std::int64_t>(zero.dimension());
  std::vector<Eigen::Triplet<Complex, std::int64_t>> triplets;
  // Column e0 <- |0_L>, e1 <- |1_L>, then the completion in generation order
  // into the remaining columns in increasing index order.
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const auto col = static_cast<std::int64_t>(j);
    for (const auto& [index, amp] : columns[j]) {
      triplets.emplace_back(static_cast<std::int64_t>(index), col, amp);
    }
  }
  SparseUnitary u(dim, dim);
  u.setFromTriplets(triplets.begin(), triplets.end());
  u.makeCompressed();
  return u;
}

void require_orthonormal(const QState& zero, const QState& one) {
  if (zero.width() != one.width()) {
    throw std::invalid_argument("code words must have the same width");
  }
  if (!zero.is_normalized() || !one.is_normalized() ||
      std::abs(zero.inner(one)) > tol::kStructural) {
    throw std::invalid_argument("code words must be orthonormal");
  }
}

}  // namespace

Code::Code(std::string name, CodeFamily family, QState zero_logical, QState one_logical,
           CompletionOrder order)
    : name_(std::move(name)),
      family_(family),
      zero_logical_(std::move(zero_logical)),
      one_logical_(std::move(one_logical)) {
  require_orthonormal(zero_logical_, one_logical_);
  if (width() > kMaxDensityWidth) {
    throw std::invalid_argument("code width exceeds the density-matrix limit");
  }
  encoder_ = build_encoder(zero_logical_, one_logical_, order);
}

QState Code::apply_encoder(const QState& psi) const {
  if (psi.width() != width()) throw std::invalid_argument("apply_encoder: width mismatch");
  return QState(width(), encoder_ * psi.amplitudes());
}

QState Code::apply_decoder(const QState& psi) const {
  if (psi.width() != width()) throw std::invalid_argument("apply_decoder: width mismatch");
  return QState(width(), encoder_.adjoint() * psi.amplitudes());
}

DensityMatrix Code::encode_density(const Eigen::Matrix2cd& qubit) const {
  Eigen::MatrixXcd logical(static_cast<Eigen::Index>(dimension()), 2);
  logical.col(0) = zero_logical_.amplitudes();
  logical.col(1) = one_logical_.amplitudes();
  return DensityMatrix(width(), logical * qubit * logical.adjoint());
}

DensityMatrix Code::decode_density(const DensityMatrix& rho) const {
  if (rho.width() != width()) throw std::invalid_argument("decode_density: width mismatch");
  const Eigen::MatrixXcd left = encoder_.adjoint() * rho.entries();
  Eigen::MatrixXcd out = left * encoder_;
  return DensityMatrix(width(), std::move(out));
}

Code symmetric_code(int n, CompletionOrder order) {
  if (n < 2 || n > kMaxSymmetricCodeWidth || n % 2 != 0) {
    throw std::invalid_argument("symmetric code needs even N in [2, " +
                                std::to_string(kMaxSymmetricCodeWidth) + "], got " +
                                std::to_string(n));
  }
  const int half = n / 2;
  const double amp = std::sqrt(2.0 / n);
  QState zero = QState::zero(n);
  QState one = QState::zero(n);
  Eigen::VectorXcd z = zero.amplitudes();
  Eigen::VectorXcd o = one.amplitudes();
  for (int i = 0; i < half; ++i) {
    z[Eigen::Index{1} << i] = amp;           // |0...0 b>
    o[Eigen::Index{1} << (i + half)] = amp;  // |b 0...0>
  }
  return Code("symmetric:" + std::to_string(n), CodeFamily::kSymmetric, QState(n, std::move(z)),
              QState(n, std::move(o)), order);
}

Code two_qubit_code(CompletionOrder order) {
  const double r = 1.0 / std::sqrt(2.0);
  return Code("two_qubit", CodeFamily::kTwoQubit, QState::from_amplitudes(2, {r, 0.0, 0.0, r}),
              QState::from_amplitudes(2, {0.0, r, r, 0.0}), order);
}

Code standard_code() {
  return Code("standard", CodeFamily::kStandard, QState::basis(1, 0), QState::basis(1, 1));
}

QState encode(const Code& code, Complex c0, Complex c1) {
  if (std::abs(std::norm(c0) + std::norm(c1) - 1.0) > tol::kInputNorm) {
    throw std::invalid_argument("encode: |c0|^2 + |c1|^2 must equal 1");
  }
  return QState(code.width(),
                c0 * code.zero_logical().amplitudes() + c1 * code.one_logical().amplitudes());
}

Eigen::MatrixXcd representation_manifold_projector(const Code& code) {
  const Eigen::VectorXcd& z = code.zero_logical().amplitudes();
  const Eigen::VectorXcd& o = code.one_logical().amplitudes();
  return z * z.adjoint() + o * o.adjoint();
}

std::string export_state(const QState& psi) {
  std::string out = "# dephase-state v1\n# width " + std::to_string(psi.width()) + "\n";
  char line[160];
  for (std::uint64_t i = 0; i < psi.dimension(); ++i) {
    const Complex a = psi.amplitude(i);
    if (a == Complex(0.0)) continue;
    std::snprintf(line, sizeof line, "%llu %s %.17g %.17g\n", static_cast<unsigned long long>(i),
                  BitString(i, psi.width()).to_string().c_str(), a.real(), a.imag());
    out += line;
  }
  return out;
}

}  // namespace dephase
