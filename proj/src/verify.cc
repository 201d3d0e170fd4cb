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

#include "dephase/verify.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include "dephase/analytics.h"
#include "dephase/bitstring.h"
#include "dephase/channels.h"
#include "dephase/codes.h"
#include "dephase/protocol.h"
#include "dephase/sweep.h"
#include "dephase/trajectories.h"

namespace dephase::cli {
namespace {

class Check {
 public:
  Check(std::string name, double tolerance) { result_.name = std::move(name), result_.tolerance = tolerance; }

  // Records |delta|; the first violation is kept as the detail.
  void delta(double d, const std::string& where) {
    const double a = std::isnan(d) ? INFINITY : std::abs(d);
    result_.max_delta = std::max(result_.max_delta, a);
    if (a > result_.tolerance) fail(where + " delta=" + format_double(d));
  }

  void require(bool ok, const std::string& where) {
    if (!ok) fail(where);
  }

  void note(const std::string& text) {
    if (result_.passed) result_.detail = text;
  }

  CheckResult done() { return std::move(result_); }

 private:
  void fail(const std::string& where) {
    if (result_.passed) result_.detail = where;
    result_.passed = false;
  }

  CheckResult result_;
};

std::string tuple(std::initializer_list<std::pair<const char*, double>> items) {
  std::string out = "(";
  bool first = true;
  for (const auto& [k, v] : items) {
    if (!first) out += ", ";
    out += std::string(k) + "=" + format_double(v);
    first = false;
  }
  return out + ")";
}

QState random_state(int width, std::mt19937_64& engine) {
  Eigen::VectorXcd v(Eigen::Index{1} << width);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    // Box-Muller on the portable uniform.
    const double u1 = 1.0 - uniform_unit(engine);
    const double u2 = uniform_unit(engine);
    const double r = std::sqrt(-2.0 * std::log(u1));
    v[i] = Complex(r * std::cos(2 * std::numbers::pi * u2), r * std::sin(2 * std::numbers::pi * u2));
  }
  return QState(width, v / v.norm());
}

AmplitudeChoice random_amplitudes(std::mt19937_64& engine) {
  // Keep away from the degenerate poles so J is defined.
  const double c0sq = 0.05 + 0.9 * uniform_unit(engine);
  return {c0sq, 2.0 * std::numbers::pi * uniform_unit(engine)};
}

ProtocolReport run(const std::shared_ptr<const Code>& code, ChannelSpec channel,
                   const AmplitudeChoice& a, int rounds = 1) {
  ProtocolRun r;
  r.code = code;
  r.channel = channel;
  r.c0 = a.c0();
  r.c1 = a.c1();
  r.rounds = rounds;
  return run_periodic(r);
}

const std::vector<int> kProtocolWidths{2, 4, 6, 8, 10};
const std::vector<double> kProtocolLambdas{0.01, 0.1, 0.5, 1.0, 2.0};

CheckResult check_bitstrings() {
  Check c("bitstring.identities", 0.0);
  for (int width = 1; width <= 8; ++width) {
    const std::uint64_t dim = std::uint64_t{1} << width;
    for (std::uint64_t b = 0; b < dim; ++b) {
      int selected = 0;
      for (std::uint64_t a = 0; a < dim; ++a) {
        const BitString sa(a, width), sb(b, width);
        c.require(hamming_distance(sa, sb) == hamming_weight(sa ^ sb), "h(a,b) != h(a xor b)");
        if (jump_selector(sa, sb)) {
          ++selected;
          c.require(hamming_weight(sa & sb) == hamming_weight(sa), "selector subset");
        }
      }
      c.require(selected == (1 << hamming_weight(b)) - 1,
                "selector count " + tuple({{"width", width}, {"b", double(b)}}));
    }
  }
  return c.done();
}

CheckResult check_reconstruction(std::mt19937_64& engine) {
  Check c("trajectories.reconstruction", 1e-10);
  for (int width = 1; width <= 6; ++width) {
    for (double lambda : {0.01, 0.1, 1.0, 5.0}) {
      for (int trial = 0; trial < 10; ++trial) {
        const QState psi = random_state(width, engine);
        const TrajectoryEnsemble ens = decompose(psi, lambda);
        const DensityMatrix damped =
            PhaseDampingChannel(lambda, width).apply(pure_to_density(psi));
        const double diff = (ens.gram_sum().entries() - damped.entries()).cwiseAbs().maxCoeff();
        c.delta(diff, tuple({{"width", width}, {"lambda", lambda}, {"trial", trial}}));
        double total = 0.0;
        for (double w : branch_weights(ens)) total += w;
        c.delta(total - 1.0, "sum p_n " + tuple({{"width", width}, {"lambda", lambda}}));
      }
    }
  }
  return c.done();
}

CheckResult check_no_jump_branch() {
  Check c("symmetric.no_jump_branch_intact", 1e-12);
  for (int n : {2, 4, 6, 8}) {
    const Code code = symmetric_code(n);
    const Complex c0(0.6, 0.0), c1 = std::polar(0.8, 0.7);
    const QState psi = encode(code, c0, c1);
    for (double lambda : {0.05, 0.5, 2.0}) {
      const TrajectoryEnsemble ens = decompose(psi, lambda);
      const Eigen::VectorXcd expected = std::exp(-lambda) * psi.amplitudes();
      c.delta((ens.dense_branch(0).amplitudes() - expected).cwiseAbs().maxCoeff(),
              tuple({{"N", n}, {"lambda", lambda}}));
    }
  }
  return c.done();
}

CheckResult check_p_accept(std::mt19937_64& engine) {
  Check c("protocol.p_accept_closed_form", 1e-10);
  for (int n : kProtocolWidths) {
    auto code = make_code("symmetric:" + std::to_string(n));
    for (double lambda : kProtocolLambdas) {
      for (int trial = 0; trial < 5; ++trial) {
        const ProtocolReport r = run(code, PhaseDamping{lambda}, random_amplitudes(engine));
        c.delta(r.p_accept_measured - analytics::p_accept_form(n, lambda),
                tuple({{"N", n}, {"lambda", lambda}, {"trial", trial}}));
      }
    }
  }
  const ProtocolReport limit = run(make_code("symmetric:6"), PhaseDamping{20.0}, {0.5, 0.0});
  const double limit_delta = limit.p_accept_measured - 1.0 / 3.0;
  c.require(std::abs(limit_delta) <= 1e-8, "large-lambda limit N=6 lambda=20 delta=" +
                                               format_double(limit_delta));
  return c.done();
}

CheckResult check_j(std::mt19937_64& engine) {
  Check c("protocol.J_closed_form", 1e-10);
  for (int n : kProtocolWidths) {
    auto code = make_code("symmetric:" + std::to_string(n));
    for (double lambda : kProtocolLambdas) {
      for (int trial = 0; trial < 5; ++trial) {
        const ProtocolReport r = run(code, PhaseDamping{lambda}, random_amplitudes(engine));
        const auto where = tuple({{"N", n}, {"lambda", lambda}, {"trial", trial}});
        c.require(r.j_measured.has_value(), "J undefined " + where);
        if (!r.j_measured) continue;
        c.delta(r.j_measured->real() - analytics::j_form(n, lambda), where);
        c.delta(r.j_measured->imag(), "Im J " + where);
      }
    }
  }
  return c.done();
}

CheckResult check_fidelity_bound(std::mt19937_64& engine) {
  Check c("protocol.fidelity_bound", 1e-10);
  for (int n : kProtocolWidths) {
    auto code = make_code("symmetric:" + std::to_string(n));
    for (double lambda : kProtocolLambdas) {
      for (int trial = 0; trial < 5; ++trial) {
        const AmplitudeChoice a = random_amplitudes(engine);
        const ProtocolReport r = run(code, PhaseDamping{lambda}, a);
        const double j = r.j_measured->real();
        const auto where = tuple({{"N", n}, {"lambda", lambda}, {"c0sq", a.c0sq}});
        c.require(r.fidelity_measured >= analytics::fidelity_lower_bound(j) - 1e-12,
                  "fidelity below (1+J)/2 " + where);
        c.delta(r.fidelity_measured - analytics::fidelity_form(j, a.c0sq, 1 - a.c0sq), where);
        c.delta(r.rho5(0, 0).real() - a.c0sq, "rho5 diagonal " + where);
      }
      const ProtocolReport even = run(code, PhaseDamping{lambda}, {0.5, 0.3});
      c.delta(even.fidelity_measured - analytics::fidelity_lower_bound(even.j_measured->real()),
              "equality at c0sq=1/2 " + tuple({{"N", n}, {"lambda", lambda}}));
    }
  }
  return c.done();
}

CheckResult check_baseline() {
  Check c("baseline.crossover", 1e-12);
  auto standard = make_code("standard");
  for (double lambda : {0.1, 0.5, 1.0}) {
    const ProtocolReport base = run(standard, PhaseDamping{lambda}, {0.5, 0.0});
    const double j0 = base.j_measured->real();
    c.delta(j0 - std::exp(-lambda), "standard J0 " + tuple({{"lambda", lambda}}));
    for (int n = 2; n <= 10; n += 2) {
      const ProtocolReport sym =
          run(make_code("symmetric:" + std::to_string(n)), PhaseDamping{lambda}, {0.5, 0.0});
      c.require((sym.j_measured->real() > j0) == analytics::beats_baseline(n, lambda),
                "simulated crossover " + tuple({{"N", n}, {"lambda", lambda}}));
    }
    for (int n = 2; n <= 64; ++n) {
      // J evaluated for every integer N, not only code widths.
      const double j = n / (2.0 * std::expm1(2.0 * lambda) + n);
      c.require((j > std::exp(-lambda)) == analytics::beats_baseline(n, lambda),
                "closed-form crossover " + tuple({{"N", n}, {"lambda", lambda}}));
    }
  }
  return c.done();
}

CheckResult check_watchdog_forms() {
  Check c("watchdog.k_round_closed_form", 1e-9);
  for (int n : {4, 6}) {
    auto code = make_code("symmetric:" + std::to_string(n));
    for (double mu : {0.05, 0.25}) {
      for (int k : {1, 2, 4, 8}) {
        const ProtocolReport r = run(code, PhaseDamping{mu}, {0.5, 0.0}, k);
        const auto form = analytics::watchdog_forms(n, 2.0 * mu, k);
        const auto where = tuple({{"N", n}, {"round_lambda", mu}, {"k", k}});
        c.delta(r.p_accept_measured - form.p_accept, "P_accept " + where);
        c.delta(r.j_measured->real() - form.j, "J " + where);
      }
    }
  }
  return c.done();
}

CheckResult check_watchdog_acceptance() {
  Check c("watchdog.single_shot_acceptance_higher", 0.0);
  for (int n : {4, 6}) {
    auto code = make_code("symmetric:" + std::to_string(n));
    for (double total : {0.1, 0.5, 1.0}) {
      const ProtocolReport single = run(code, PhaseDamping{total}, {0.5, 0.0});
      for (int k : {2, 4, 8}) {
        const ProtocolReport sliced = run(code, PhaseDamping{total / k}, {0.5, 0.0}, k);
        c.require(single.p_accept_measured > sliced.p_accept_measured,
                  tuple({{"N", n}, {"lambda", total}, {"k", k}}));
      }
    }
  }
  return c.done();
}

CheckResult check_watchdog_coherence() {
  // Finding, not a published claim: -log J is convex in lambda, so slicing
  // the same total damping keeps more coherence among accepted runs.
  Check c("watchdog.sliced_coherence_not_lower", 0.0);
  double max_gain = 0.0;
  for (int n : {4, 6}) {
    auto code = make_code("symmetric:" + std::to_string(n));
    for (double total : {0.1, 0.5, 1.0}) {
      const ProtocolReport single = run(code, PhaseDamping{total}, {0.5, 0.0});
      for (int k : {2, 4, 8}) {
        const ProtocolReport sliced = run(code, PhaseDamping{total / k}, {0.5, 0.0}, k);
        const double gain = sliced.j_measured->real() - single.j_measured->real();
        max_gain = std::max(max_gain, gain);
        c.require(gain >= -1e-12, tuple({{"N", n}, {"lambda", total}, {"k", k}}));
      }
    }
  }
  c.note("periodic J exceeds single-shot J by up to " + format_double(max_gain) +
         "; only the acceptance probability is worse under slicing");
  return c.done();
}

CheckResult check_quadratic_watchdog() {
  Check c("watchdog.quadratic_slicing_effective", 0.0);
  for (int n : {4, 6, 8}) {
    for (double eps : {1e-4, 1e-3}) {
      for (int k : {2, 5, 10}) {
        const auto f = analytics::quadratic_watchdog_forms(n, eps, k);
        c.require(std::abs(f.j_sliced - 1.0) < std::abs(f.j_unsliced - 1.0),
                  tuple({{"N", n}, {"eps", eps}, {"k", k}}));
      }
    }
  }
  c.note("displayed quadratic-schedule J values exceed 1 for eps > 0");
  return c.done();
}

CheckResult check_two_qubit() {
  Check c("two_qubit.p_accept_and_fidelity", 1e-10);
  auto code = make_code("two_qubit");
  double published_gap = 0.0;
  for (double lambda : {0.0, 0.01, 0.1, 0.5, 1.0}) {
    for (double c0sq : {0.2, 0.5, 0.9}) {
      const ProtocolReport r = run(code, PhaseDamping{lambda}, {c0sq, 0.4});
      const auto form = analytics::two_qubit_forms(lambda, c0sq, 1 - c0sq);
      const auto where = tuple({{"lambda", lambda}, {"c0sq", c0sq}});
      c.delta(r.p_accept_measured - form.p_accept, "P_accept " + where);
      const double j = r.j_measured->real();
      c.require(r.fidelity_measured >= analytics::fidelity_lower_bound(j) - 1e-12,
                "fidelity bound " + where);
      c.delta(j - 1.0 / analytics::cosh_exp(lambda), "J = 1/cosh " + where);
      if (lambda == 0.0) {
        c.delta(r.fidelity_measured - 1.0, "identity channel fidelity " + where);
        published_gap = std::max(published_gap, std::abs(r.fidelity_measured - form.fidelity));
      }
    }
  }
  // 1 - F is quadratic at small lambda: the ratio (1 - F)/lambda^2 settles.
  const double r1 = (1.0 - run(code, PhaseDamping{1e-3}, {0.5, 0.0}).fidelity_measured) / 1e-6;
  const double r2 = (1.0 - run(code, PhaseDamping{2e-3}, {0.5, 0.0}).fidelity_measured) / 4e-6;
  c.require(std::abs(r1 - r2) < 1e-3 * std::abs(r1) + 1e-9, "quadratic small-lambda fidelity");
  c.note("published fidelity expression differs from simulation by up to " +
         format_double(published_gap) + " at lambda=0");
  return c.done();
}

CheckResult check_amplitude(std::mt19937_64& engine) {
  Check c("amplitude.perfect_detection", 1e-10);
  for (int n : {4, 6}) {
    auto code = make_code("symmetric:" + std::to_string(n));
    for (double gamma : {0.1, 0.3, 0.7}) {
      for (int trial = 0; trial < 3; ++trial) {
        ProtocolRun r;
        r.code = code;
        r.channel = AmplitudeDamping{gamma};
        const AmplitudeChoice a = random_amplitudes(engine);
        r.c0 = a.c0();
        r.c1 = a.c1();
        const ProtocolReport rep = run_amplitude(r);
        const auto where = tuple({{"N", n}, {"gamma", gamma}, {"trial", trial}});
        c.delta(rep.fidelity_measured - 1.0, "fidelity " + where);
        c.delta(rep.p_accept_measured - (1.0 - gamma), "P_accept " + where);
      }
    }
  }
  return c.done();
}

CheckResult check_monte_carlo(std::uint64_t seed) {
  Check c("trajectories.monte_carlo_acceptance", 3.0);
  const Code code = symmetric_code(4);
  const double lambda = 0.2;
  const MonteCarloEstimate est = sample_acceptance(code, lambda, std::sqrt(0.5),
                                                   std::sqrt(0.5), 100000, seed);
  const double exact = analytics::p_accept_form(4, lambda);
  c.delta((est.mean - exact) / est.standard_error, "standard errors from exact");
  c.note("mean=" + format_double(est.mean) + " exact=" + format_double(exact));
  return c.done();
}

CheckResult check_completion_independence() {
  Check c("codes.encoder_completion_independence", 1e-12);
  const std::vector<std::pair<Code, Code>> pairs{
      {symmetric_code(4, CompletionOrder::kAscending),
       symmetric_code(4, CompletionOrder::kDescending)},
      {symmetric_code(6, CompletionOrder::kAscending),
       symmetric_code(6, CompletionOrder::kDescending)},
      {two_qubit_code(CompletionOrder::kAscending), two_qubit_code(CompletionOrder::kDescending)}};
  for (const auto& [a, b] : pairs) {
    c.require((a.encoder_dense() - b.encoder_dense()).cwiseAbs().maxCoeff() > 1e-6,
              "completions coincide for " + a.name());
    auto pa = std::make_shared<const Code>(a);
    auto pb = std::make_shared<const Code>(b);
    for (double lambda : {0.1, 1.0}) {
      const ProtocolReport ra = run(pa, PhaseDamping{lambda}, {0.3, 1.1});
      const ProtocolReport rb = run(pb, PhaseDamping{lambda}, {0.3, 1.1});
      c.delta(ra.p_accept_measured - rb.p_accept_measured, a.name() + " P_accept");
      c.delta((ra.rho5 - rb.rho5).cwiseAbs().maxCoeff(), a.name() + " rho5");
    }
  }
  return c.done();
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  std::mt19937_64 engine(options.seed);
  std::vector<CheckResult> out;
  out.push_back(check_bitstrings());
  out.push_back(check_reconstruction(engine));
  out.push_back(check_no_jump_branch());
  out.push_back(check_p_accept(engine));
  out.push_back(check_j(engine));
  out.push_back(check_fidelity_bound(engine));
  out.push_back(check_baseline());
  out.push_back(check_watchdog_forms());
  out.push_back(check_watchdog_acceptance());
  out.push_back(check_watchdog_coherence());
  out.push_back(check_quadratic_watchdog());
  out.push_back(check_two_qubit());
  out.push_back(check_amplitude(engine));
  out.push_back(check_monte_carlo(options.seed));
  out.push_back(check_completion_independence());
  return out;
}

std::string format_checks(const std::vector<CheckResult>& checks, bool verbose) {
  std::ostringstream os;
  for (const CheckResult& c : checks) {
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
    if (verbose) {
      char buf[64];
      std::snprintf(buf, sizeof buf, " max_delta=%.3g tol=%g", c.max_delta, c.tolerance);
      os << buf;
    }
    if (!c.passed || (verbose && !c.detail.empty())) os << " : " << c.detail;
    os << "\n";
  }
  return os.str();
}

}  // namespace dephase::cli
