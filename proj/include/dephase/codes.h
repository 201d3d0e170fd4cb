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

#ifndef DEPHASE_CODES_H
#define DEPHASE_CODES_H

#include <cstdint>
#include <string>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "dephase/qstate.h"

namespace dephase {

inline constexpr int kMaxSymmetricCodeWidth = 12;

/// Basis labels the logical amplitudes occupy before encoding: data bit in
/// bit 0, all ancilla in |0>.
inline constexpr std::uint64_t kLogicalZeroSlot = 0;  // |0...00>
inline constexpr std::uint64_t kLogicalOneSlot = 1;   // |0...01>

enum class CodeFamily { kStandard, kSymmetric, kTwoQubit, kCustom };

/// Order in which computational basis vectors are fed to Gram-Schmidt when
/// completing the encoder beyond the logical columns.
enum class CompletionOrder { kAscending, kDescending };

using SparseUnitary = Eigen::SparseMatrix<Complex, Eigen::ColMajor, std::int64_t>;

/// A logical qubit representation: orthonormal code words |0_L>, |1_L> and an
/// encoder U with U|e0> = |0_L>, U|e1> = |1_L>. Immutable.
class Code {
 public:
  Code(std::string name, CodeFamily family, QState zero_logical, QState one_logical,
       CompletionOrder order = CompletionOrder::kAscending);

  const std::string& name() const { return name_; }
  CodeFamily family() const { return family_; }
  int width() const { return zero_logical_.width(); }
  std::size_t dimension() const { return zero_logical_.dimension(); }
  const QState& zero_logical() const { return zero_logical_; }
  const QState& one_logical() const { return one_logical_; }
  const QState& logical(int bit) const { return bit == 0 ? zero_logical_ : one_logical_; }

  const SparseUnitary& encoder() const { return encoder_; }
  Eigen::MatrixXcd encoder_dense() const { return Eigen::MatrixXcd(encoder_); }

  QState apply_encoder(const QState& psi) const;
  QState apply_decoder(const QState& psi) const;

  /// U (rho_qubit (x) |0..0><0..0|_ancilla) U^dagger for a 2x2 logical density
  /// matrix laid out on the (e0, e1) slots.
  DensityMatrix encode_density(const Eigen::Matrix2cd& qubit) const;
  /// U^dagger rho U
  DensityMatrix decode_density(const DensityMatrix& rho) const;

 private:
  std::string name_;
  CodeFamily family_;
  QState zero_logical_;
  QState one_logical_;
  SparseUnitary encoder_;
};

/// |0_L> = sqrt(2/N) sum_b |0...0 b>, |1_L> = sqrt(2/N) sum_b |b 0...0> with b
/// ranging over the N/2 one-hot strings of length N/2. The low half holds the
/// |0_L> block. Requires even N in [2, 12].
Code symmetric_code(int n, CompletionOrder order = CompletionOrder::kAscending);

/// |0_L> = (|00> + |11>)/sqrt2, |1_L> = (|01> + |10>)/sqrt2.
Code two_qubit_code(CompletionOrder order = CompletionOrder::kAscending);

/// The unencoded qubit: width 1, U = identity.
Code standard_code();

/// c0|0_L> + c1|1_L>. Throws if |c0|^2 + |c1|^2 deviates from 1 by more than
/// tol::kInputNorm.
QState encode(const Code& code, Complex c0, Complex c1);

/// |0_L><0_L| + |1_L><1_L| as a dense matrix.
Eigen::MatrixXcd representation_manifold_projector(const Code& code);

/// Text export of the nonzero amplitudes of a state, one per line:
///
///   # dephase-state v1
///   # width <N>
///   <index> <ket digits> <re> <im>
///
/// Numbers use 17 significant digits.
std::string export_state(const QState& psi);

}  // namespace dephase

#endif  // DEPHASE_CODES_H
