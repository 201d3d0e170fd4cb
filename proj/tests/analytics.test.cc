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

#include "dephase/analytics.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gtest/gtest.h"

namespace dephase::analytics {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Reference values below were computed independently at 50-digit precision
// and rounded to double.

TEST(PAcceptForm, Values) {
  for (int n : {2, 4, 10}) EXPECT_EQ(p_accept_form(n, 0.0), 1.0);
  EXPECT_NEAR(p_accept_form(4, 0.1), 0.90936537653899092, 1e-15);
  EXPECT_NEAR(p_accept_form(6, 20.0), 1.0 / 3.0, 1e-8);
  EXPECT_EQ(p_accept_form(2, 3.0), 1.0);
}

TEST(JForm, Values) {
  for (int n : {2, 4, 10}) EXPECT_EQ(j_form(n, 0.0), 1.0);
  EXPECT_NEAR(j_form(4, 0.1), 0.90033200537504418, 1e-15);
  EXPECT_NEAR(j_form(8, 0.05), 0.97438086740491968, 1e-15);
}

TEST(JForm, FirstOrderExpansion) {
  const double defect = 1.0 - j_form(8, 0.05);
  EXPECT_NEAR(defect, 4 * 0.05 / 8, 0.1 * 0.025);
  for (double lambda : {1e-4, 1e-5}) {
    EXPECT_NEAR((1.0 - j_form(6, lambda)) / (4 * lambda / 6), 1.0, 10 * lambda);
  }
}

TEST(JForm, TinyLambdaKeepsPrecision) {
  // N / (2 expm1(2 lambda) + N) stays accurate where e^{2 lambda} - 1 cancels.
  EXPECT_NEAR(1.0 - j_form(4, 1e-12), 1e-12, 2.3e-16);
}

TEST(ClosedForms, Monotonicity) {
  for (int n = 2; n <= 64; n += 2) {
    double prev_p = 2.0, prev_j = 2.0;
    for (int i = 0; i <= 300; ++i) {
      const double lambda = 0.01 * i;
      const double p = p_accept_form(n, lambda), j = j_form(n, lambda);
      if (n > 2) ASSERT_LT(p, prev_p) << n << " " << lambda;
      ASSERT_LT(j, prev_j) << n << " " << lambda;
      ASSERT_GE(p, 0.0);
      ASSERT_LE(p, 1.0);
      ASSERT_GE(j, 0.0);
      ASSERT_LE(j, 1.0);
      prev_p = p;
      prev_j = j;
    }
  }
  for (double lambda : {0.01, 0.5, 2.0})
    for (int n = 2; n < 64; n += 2) EXPECT_GT(j_form(n + 2, lambda), j_form(n, lambda));
}

TEST(ClosedForms, RejectsOutsideDomain) {
  for (int n : {-2, 0, 1, 3, 5}) {
    EXPECT_THROW(p_accept_form(n, 0.1), std::invalid_argument) << n;
    EXPECT_THROW(j_form(n, 0.1), std::invalid_argument) << n;
  }
  // The crossover predicate is stated for every positive integer N.
  EXPECT_THROW(beats_baseline(0, 0.1), std::invalid_argument);
  EXPECT_THROW(beats_baseline(-4, 0.1), std::invalid_argument);
  EXPECT_FALSE(beats_baseline(4, 0.1));
  EXPECT_TRUE(beats_baseline(5, 0.1));
  for (double lambda : {-0.1, kNaN}) {
    EXPECT_THROW(p_accept_form(4, lambda), std::invalid_argument);
    EXPECT_THROW(j_form(4, lambda), std::invalid_argument);
    EXPECT_THROW(baseline_j_form(lambda), std::invalid_argument);
    EXPECT_THROW(two_qubit_forms(lambda, 0.5, 0.5), std::invalid_argument);
  }
}

TEST(Baseline, Crossover) {
  EXPECT_EQ(baseline_j_form(0.0), 1.0);
  EXPECT_NEAR(baseline_j_form(0.1), std::exp(-0.1), 1e-16);
  int checked = 0;
  for (int n = 2; n <= 64; n += 2) {
    for (int i = 1; i <= 300; ++i) {
      const double lambda = 0.01 * i;
      const double boundary = 2 * (1 + std::exp(lambda));
      if (std::abs(n - boundary) < 1e-9) continue;
      const bool wins = j_form(n, lambda) > baseline_j_form(lambda);
      ASSERT_EQ(wins, n > boundary) << n << " " << lambda;
      ASSERT_EQ(beats_baseline(n, lambda), wins) << n << " " << lambda;
      ++checked;
    }
  }
  EXPECT_GT(checked, 9000);
  // Smallest winning code at a few damping strengths.
  EXPECT_FALSE(beats_baseline(4, 0.1));
  EXPECT_TRUE(beats_baseline(6, 0.1));
  EXPECT_FALSE(beats_baseline(6, 1.0));
  EXPECT_TRUE(beats_baseline(8, 1.0));
}

TEST(FidelityForm, Values) {
  EXPECT_EQ(fidelity_form(1.0, 0.3, 0.7), 1.0);
  EXPECT_NEAR(fidelity_form(0.9, 0.5, 0.5), 0.95, 1e-15);
  EXPECT_NEAR(fidelity_form(j_form(4, 0.1), 0.5, 0.5), 0.95016600268752209, 1e-15);
  EXPECT_EQ(fidelity_form(0.0, 1.0, 0.0), 1.0);
}

TEST(FidelityForm, GridMinimumMeetsBound) {
  double best = 2.0, arg = -1.0;
  for (int i = 0; i <= 1000; ++i) {
    const double c0sq = i / 1000.0;
    const double f = fidelity_form(0.8, c0sq, 1.0 - c0sq);
    ASSERT_GE(f, fidelity_lower_bound(0.8) - 1e-15);
    if (f < best) {
      best = f;
      arg = c0sq;
    }
  }
  EXPECT_NEAR(best, 0.9, 1e-15);
  EXPECT_NEAR(arg, 0.5, 1e-12);
  EXPECT_NEAR(fidelity_lower_bound(0.8), 0.9, 1e-15);
}

TEST(FidelityForm, BoundIsStrictAwayFromEqualWeights) {
  for (double j : {0.0, 0.3, 0.99})
    for (double c0sq : {0.0, 0.1, 0.49, 0.51, 0.9})
      EXPECT_GT(fidelity_form(j, c0sq, 1 - c0sq), fidelity_lower_bound(j)) << j << " " << c0sq;
}

TEST(FidelityForm, RejectsOutsideDomain) {
  EXPECT_THROW(fidelity_form(1.1, 0.5, 0.5), std::invalid_argument);
  EXPECT_THROW(fidelity_form(-0.1, 0.5, 0.5), std::invalid_argument);
  EXPECT_THROW(fidelity_form(0.5, 0.5, 0.6), std::invalid_argument);
  EXPECT_THROW(fidelity_form(0.5, -0.1, 1.1), std::invalid_argument);
  EXPECT_THROW(fidelity_form(kNaN, 0.5, 0.5), std::invalid_argument);
  EXPECT_THROW(fidelity_lower_bound(1.5), std::invalid_argument);
}

TEST(WatchdogForms, Values) {
  const WatchdogForms w1 = watchdog_forms(4, 0.1, 1);
  EXPECT_NEAR(w1.j, 4.0 / (2 * std::exp(0.1) - 2 + 4), 1e-15);
  EXPECT_NEAR(w1.p_accept, 0.5 + 0.5 * std::exp(-0.1), 1e-15);

  const WatchdogForms w2 = watchdog_forms(4, 0.05, 2);
  EXPECT_NEAR(w2.j, 0.95063515373869284, 1e-15);
  EXPECT_NEAR(w2.p_accept, 0.95182406675934690, 1e-15);
}

TEST(WatchdogForms, OneRoundMatchesSingleShotAtDoubledExponent) {
  for (int n : {2, 4, 8})
    for (double mu : {0.01, 0.3, 1.5}) {
      const WatchdogForms w = watchdog_forms(n, 2 * mu, 1);
      EXPECT_NEAR(w.j, j_form(n, mu), 1e-15);
      EXPECT_NEAR(w.p_accept, p_accept_form(n, mu), 1e-15);
    }
}

TEST(WatchdogForms, RejectsOutsideDomain) {
  EXPECT_THROW(watchdog_forms(4, 0.1, 0), std::invalid_argument);
  EXPECT_THROW(watchdog_forms(3, 0.1, 2), std::invalid_argument);
  EXPECT_THROW(watchdog_forms(4, -0.1, 2), std::invalid_argument);
}

TEST(QuadraticWatchdogForms, Values) {
  const QuadraticWatchdogForms zero = quadratic_watchdog_forms(4, 0.0, 3);
  EXPECT_EQ(zero.j_unsliced, 1.0);
  EXPECT_EQ(zero.j_sliced, 1.0);

  const QuadraticWatchdogForms q = quadratic_watchdog_forms(4, 0.001, 5);
  EXPECT_NEAR(q.j_unsliced, 1.0126582278481013, 1e-14);
  EXPECT_NEAR(q.j_sliced, 1.0025037543793789, 1e-14);
  EXPECT_NEAR(q.j_unsliced_expansion, 1 + 2 * 25 * 0.001 / 4, 1e-15);
  EXPECT_NEAR(q.j_sliced_expansion, 1 + 2 * 5 * 0.001 / 4, 1e-15);
}

TEST(QuadraticWatchdogForms, SlicingStaysCloserToOne) {
  for (int n : {4, 8, 16})
    for (int k : {2, 3, 10})
      for (double eps : {1e-5, 1e-3}) {
        const QuadraticWatchdogForms q = quadratic_watchdog_forms(n, eps, k);
        EXPECT_LT(std::abs(q.j_sliced - 1), std::abs(q.j_unsliced - 1)) << n << " " << k << " " << eps;
      }
}

TEST(QuadraticWatchdogForms, RejectsSingularSchedule) {
  EXPECT_THROW(quadratic_watchdog_forms(4, 0.04, 5), std::invalid_argument);
  EXPECT_THROW(quadratic_watchdog_forms(4, 0.05, 5), std::invalid_argument);
  EXPECT_THROW(quadratic_watchdog_forms(4, -0.001, 5), std::invalid_argument);
  EXPECT_THROW(quadratic_watchdog_forms(4, 0.001, 0), std::invalid_argument);
  EXPECT_NO_THROW(quadratic_watchdog_forms(4, 0.0399, 5));
}

TEST(TwoQubitForms, Values) {
  const TwoQubitForms zero = two_qubit_forms(0.0, 0.5, 0.5);
  EXPECT_EQ(zero.p_accept, 1.0);
  EXPECT_NEAR(zero.fidelity, 0.5, 1e-15);

  const TwoQubitForms half = two_qubit_forms(0.5, 0.5, 0.5);
  EXPECT_NEAR(half.p_accept, 0.68393972058572116, 1e-15);
  EXPECT_NEAR(half.fidelity, 0.55659055801496305, 1e-15);

  EXPECT_THROW(two_qubit_forms(0.1, 0.5, 0.6), std::invalid_argument);
}

TEST(TwoQubitForms, FlatAtZeroDamping) {
  const double h = 1e-5;
  const double slope =
      (two_qubit_forms(h, 0.3, 0.7).fidelity - two_qubit_forms(0.0, 0.3, 0.7).fidelity) / h;
  EXPECT_NEAR(slope, 0.0, 1e-5);
  // Quadratic leading order: defect relative to lambda = 0 scales as lambda^2.
  const double d1 = two_qubit_forms(1e-3, 0.5, 0.5).fidelity - two_qubit_forms(0.0, 0.5, 0.5).fidelity;
  const double d2 = two_qubit_forms(2e-3, 0.5, 0.5).fidelity - two_qubit_forms(0.0, 0.5, 0.5).fidelity;
  EXPECT_NEAR(d2 / d1, 4.0, 1e-3);
}

TEST(CoshExp, MatchesStd) {
  for (double x : {0.0, 0.5, -1.2, 7.0}) EXPECT_NEAR(cosh_exp(x), std::cosh(x), 1e-15 * std::cosh(x));
}

}  // namespace
}  // namespace dephase::analytics
