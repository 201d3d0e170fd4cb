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
#include <random>
#include <stdexcept>

#include "gtest/gtest.h"
#include "test_util.h"

namespace dephase {
namespace {

using testing::max_abs_diff;
using testing::on_qubit;
using testing::random_density;

// Applies a single-qubit Kraus set to every qubit in turn, using explicit
// Kronecker-lifted operators.
Eigen::MatrixXcd kraus_per_qubit(const Eigen::MatrixXcd& rho, int width,
                                 const std::vector<Eigen::Matrix2cd>& kraus) {
  Eigen::MatrixXcd cur = rho;
  for (int q = 0; q < width; ++q) {
    Eigen::MatrixXcd next = Eigen::MatrixXcd::Zero(cur.rows(), cur.cols());
    for (const Eigen::Matrix2cd& k : kraus) {
      const Eigen::MatrixXcd lifted = on_qubit(k, q, width);
      next += lifted * cur * lifted.adjoint();
    }
    cur = next;
  }
  return cur;
}

std::vector<Eigen::Matrix2cd> dephasing_kraus(double lambda) {
  Eigen::Matrix2cd k0, k1;
  k0 << 1, 0, 0, std::exp(-lambda);
  k1 << 0, 0, 0, std::sqrt(1 - std::exp(-2 * lambda));
  return {k0, k1};
}

std::vector<Eigen::Matrix2cd> decay_kraus(double gamma) {
  Eigen::Matrix2cd k0, k1;
  k0 << 1, 0, 0, std::sqrt(1 - gamma);
  k1 << 0, std::sqrt(gamma), 0, 0;
  return {k0, k1};
}

// Relabels qubits: bit q of the index moves to bit perm[q].
Eigen::MatrixXcd permute_qubits(const Eigen::MatrixXcd& rho, const std::vector<int>& perm) {
  auto map = [&](Eigen::Index i) {
    Eigen::Index out = 0;
    for (std::size_t q = 0; q < perm.size(); ++q)
      if ((i >> q) & 1) out |= Eigen::Index{1} << perm[q];
    return out;
  };
  Eigen::MatrixXcd out(rho.rows(), rho.cols());
  for (Eigen::Index i = 0; i < rho.rows(); ++i)
    for (Eigen::Index j = 0; j < rho.cols(); ++j) out(map(i), map(j)) = rho(i, j);
  return out;
}

TEST(PhaseDamping, ZeroLambdaIsIdentity) {
  std::mt19937_64 rng(1);
  const DensityMatrix rho = random_density(3, rng);
  EXPECT_EQ(PhaseDampingChannel(0.0, 3).apply(rho).entries(), rho.entries());
}

TEST(PhaseDamping, SingleQubitOffDiagonalDecay) {
  const Complex c0(0.6, 0.0), c1(0.0, 0.8);
  Eigen::MatrixXcd m(2, 2);
  m << std::norm(c0), c0 * std::conj(c1), std::conj(c0) * c1, std::norm(c1);
  const double lambda = 0.7;
  const DensityMatrix out = apply_phase_damping(PhaseDampingChannel(lambda, 1), DensityMatrix(1, m));
  EXPECT_EQ(out.entry(0, 0), m(0, 0));
  EXPECT_EQ(out.entry(1, 1), m(1, 1));
  EXPECT_NEAR(std::abs(out.entry(0, 1) - m(0, 1) * std::exp(-lambda)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(out.entry(1, 0) - m(1, 0) * std::exp(-lambda)), 0.0, 1e-15);
}

TEST(PhaseDamping, MatchesPerQubitKrausComposition) {
  std::mt19937_64 rng(2);
  for (double lambda : {0.05, 0.6, 3.0}) {
    const DensityMatrix rho = random_density(3, rng);
    const Eigen::MatrixXcd oracle = kraus_per_qubit(rho.entries(), 3, dephasing_kraus(lambda));
    EXPECT_LT(max_abs_diff(PhaseDampingChannel(lambda, 3).apply(rho).entries(), oracle), 1e-12);
  }
}

TEST(PhaseDampingProperty, CompositionAddsLambdas) {
  std::mt19937_64 rng(3);
  for (int width = 1; width <= 6; ++width) {
    const DensityMatrix rho = random_density(width, rng);
    const double l1 = 0.13 * width, l2 = 0.4;
    const DensityMatrix twice =
        PhaseDampingChannel(l2, width).apply(PhaseDampingChannel(l1, width).apply(rho));
    const DensityMatrix once = PhaseDampingChannel(l1 + l2, width).apply(rho);
    EXPECT_LT(max_abs_diff(twice.entries(), once.entries()), 1e-12);
  }
}

TEST(PhaseDampingProperty, DiagonalUntouched) {
  std::mt19937_64 rng(4);
  for (double lambda : {0.0, 0.2, 5.0, 40.0}) {
    const DensityMatrix rho = random_density(4, rng);
    const DensityMatrix out = PhaseDampingChannel(lambda, 4).apply(rho);
    EXPECT_EQ(Eigen::VectorXcd(out.entries().diagonal()), Eigen::VectorXcd(rho.entries().diagonal()));
  }
}

TEST(ChannelProperty, PreserveHermiticityTraceAndPositivity) {
  std::mt19937_64 rng(5);
  for (int width = 1; width <= 5; ++width) {
    const DensityMatrix rho = random_density(width, rng);
    for (const DensityMatrix& out : {PhaseDampingChannel(0.8, width).apply(rho),
                                     AmplitudeDampingChannel(0.35, width).apply(rho)}) {
      EXPECT_TRUE(out.is_hermitian());
      EXPECT_NEAR(out.trace(), 1.0, 1e-12);
      EXPECT_TRUE(out.is_positive_semidefinite());
    }
  }
}

TEST(PhaseDampingProperty, CommutesWithQubitPermutation) {
  std::mt19937_64 rng(6);
  const DensityMatrix rho = random_density(4, rng);
  const std::vector<int> perm{2, 0, 3, 1};
  const PhaseDampingChannel ch(0.45, 4);
  const Eigen::MatrixXcd a = permute_qubits(ch.apply(rho).entries(), perm);
  const Eigen::MatrixXcd b = ch.apply(DensityMatrix(4, permute_qubits(rho.entries(), perm))).entries();
  EXPECT_LT(max_abs_diff(a, b), 1e-15);
}

TEST(PhaseDamping, RejectsBadInput) {
  EXPECT_THROW(PhaseDampingChannel(-0.1, 2), std::invalid_argument);
  EXPECT_THROW(PhaseDampingChannel(0.1, 3).apply(DensityMatrix::zero(2)), std::invalid_argument);
}

TEST(AmplitudeDamping, ZeroGammaIsIdentity) {
  std::mt19937_64 rng(7);
  const DensityMatrix rho = random_density(3, rng);
  EXPECT_LT(max_abs_diff(AmplitudeDampingChannel(0.0, 3).apply(rho).entries(), rho.entries()), 1e-16);
}

TEST(AmplitudeDamping, ExcitedQubitDecays) {
  const DensityMatrix one = pure_to_density(QState::basis(1, 1));
  const DensityMatrix out = apply_amplitude_damping(AmplitudeDampingChannel(0.3, 1), one);
  EXPECT_NEAR(out.entry(0, 0).real(), 0.3, 1e-15);
  EXPECT_NEAR(out.entry(1, 1).real(), 0.7, 1e-15);
  EXPECT_EQ(out.entry(0, 1), Complex(0.0));
}

TEST(AmplitudeDamping, TwoQubitPopulationTransfer) {
  for (double gamma : {0.1, 0.5, 0.9}) {
    const DensityMatrix out =
        AmplitudeDampingChannel(gamma, 2).apply(pure_to_density(QState::basis(2, 0b01)));
    EXPECT_NEAR(out.entry(0b00, 0b00).real(), gamma, 1e-15);
    EXPECT_NEAR(out.entry(0b01, 0b01).real(), 1 - gamma, 1e-15);
  }
}

TEST(AmplitudeDamping, MatchesPerQubitKrausComposition) {
  std::mt19937_64 rng(8);
  for (double gamma : {0.2, 0.75, 1.0}) {
    const DensityMatrix rho = random_density(3, rng);
    const Eigen::MatrixXcd oracle = kraus_per_qubit(rho.entries(), 3, decay_kraus(gamma));
    EXPECT_LT(max_abs_diff(AmplitudeDampingChannel(gamma, 3).apply(rho).entries(), oracle), 1e-12);
  }
}

TEST(AmplitudeDamping, RejectsBadInput) {
  EXPECT_THROW(AmplitudeDampingChannel(1.5, 2), std::invalid_argument);
  EXPECT_THROW(AmplitudeDampingChannel(-0.1, 2), std::invalid_argument);
  EXPECT_THROW(AmplitudeDampingChannel(0.1, 2).apply(DensityMatrix::zero(1)), std::invalid_argument);
}

}  // namespace
}  // namespace dephase
