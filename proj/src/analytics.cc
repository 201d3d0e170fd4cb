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
#include <stdexcept>
#include <string>

namespace dephase::analytics {
namespace {

void require_code_width(int n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("N must be even and >= 2, got " + std::to_string(n));
  }
}

void require_damping(double lambda) {
  if (!(lambda >= 0.0) || std::isinf(lambda)) {
    throw std::invalid_argument("damping exponent must be finite and >= 0");
  }
}

void require_rounds(int k) {
  if (k < 1) throw std::invalid_argument("round count k must be >= 1");
}

void require_coherence(double j) {
  if (!(j >= 0.0 && j <= 1.0 + 1e-12)) throw std::invalid_argument("J must lie in [0, 1]");
}

void require_populations(double c0sq, double c1sq) {
  if (c0sq < 0.0 || c1sq < 0.0 || std::abs(c0sq + c1sq - 1.0) > 1e-9) {
    throw std::invalid_argument("populations must be nonnegative and sum to 1");
  }
}

}  // namespace

double p_accept_form(int n, double lambda) {
  require_code_width(n);
  require_damping(lambda);
  const double floor = 2.0 / n;
  return floor + (1.0 - floor) * std::exp(-2.0 * lambda);
}

double j_form(int n, double lambda) {
  require_code_width(n);
  require_damping(lambda);
  // 2 e^{2 lambda} - 2 written with expm1 for small lambda.
  return n / (2.0 * std::expm1(2.0 * lambda) + n);
}

double baseline_j_form(double lambda) {
  require_damping(lambda);
  return std::exp(-lambda);
}

double fidelity_form(double j, double c0sq, double c1sq) {
  require_coherence(j);
  require_populations(c0sq, c1sq);
  return 1.0 - 2.0 * c0sq * c1sq * (1.0 - j);
}

double fidelity_lower_bound(double j) {
  require_coherence(j);
  return (1.0 + j) / 2.0;
}

bool beats_baseline(int n, double lambda) {
  require_damping(lambda);
  if (n < 1) throw std::invalid_argument("N must be positive");
  return n > 2.0 * (1.0 + std::exp(lambda));
}

WatchdogForms watchdog_forms(int n, double exponent_per_round, int k) {
  require_code_width(n);
  require_damping(exponent_per_round);
  require_rounds(k);
  const double floor = 2.0 / n;
  const double p_round = floor + (1.0 - floor) * std::exp(-exponent_per_round);
  const double j_round = n / (2.0 * std::expm1(exponent_per_round) + n);
  return {std::pow(p_round, k), std::pow(j_round, k)};
}

QuadraticWatchdogForms quadratic_watchdog_forms(int n, double epsilon, int k) {
  require_code_width(n);
  require_rounds(k);
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
  const double k2 = static_cast<double>(k) * k;
  if (k2 * epsilon >= 1.0) {
    throw std::invalid_argument("quadratic schedule requires k^2 epsilon < 1");
  }
  QuadraticWatchdogForms out{};
  out.j_unsliced = n / (2.0 * (1.0 - k2 * epsilon) - 2.0 + n);
  out.j_sliced = std::pow(n / (2.0 * (1.0 - epsilon) - 2.0 + n), k);
  out.j_unsliced_expansion = 1.0 + 2.0 * k2 * epsilon / n;
  out.j_sliced_expansion = 1.0 + 2.0 * k * epsilon / n;
  return out;
}

double cosh_exp(double x) { return (std::exp(x) + std::exp(-x)) / 2.0; }

TwoQubitForms two_qubit_forms(double lambda, double c0sq, double c1sq) {
  require_damping(lambda);
  require_populations(c0sq, c1sq);
  return {(1.0 + std::exp(-2.0 * lambda)) / 2.0, 1.0 - 2.0 * c0sq * c1sq / cosh_exp(lambda)};
}

}  // namespace dephase::analytics
