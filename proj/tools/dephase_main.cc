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

// Command-line front end: sweep, verify, formulas, decompose.
//
// Exit status: 0 success, 1 verification failure, 2 usage or capacity error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dephase/analytics.h"
#include "dephase/codes.h"
#include "dephase/sweep.h"
#include "dephase/trajectories.h"
#include "dephase/verify.h"

namespace {

using dephase::cli::ConfigError;
using dephase::cli::format_double;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

// Raw flag values. Flags given on the command line win over the config file.
struct Flags {
  std::vector<std::string> code;
  std::string channel;
  std::string lambda;
  std::string gamma;
  std::string c0sq;
  std::string k;
  std::string seed;
  std::string out;
  std::string workers;
  std::string config;
  std::string formula;
  std::string epsilon;
  bool verbose = false;
};

void add_flag(CLI::App* sub, const std::string& name, std::string& target, const std::string& help) {
  sub->add_option("--" + name, target, help);
}

void apply_config_file(CLI::App* sub, Flags& flags) {
  if (flags.config.empty()) return;
  const std::map<std::string, std::string> file = dephase::cli::read_config_file(flags.config);
  const std::map<std::string, std::string*> scalar{
      {"channel", &flags.channel}, {"lambda", &flags.lambda}, {"gamma", &flags.gamma},
      {"c0sq", &flags.c0sq},       {"k", &flags.k},           {"seed", &flags.seed},
      {"out", &flags.out},         {"workers", &flags.workers}, {"formula", &flags.formula},
      {"epsilon", &flags.epsilon}};
  for (const auto& [key, value] : file) {
    const std::string option = "--" + key;
    CLI::Option* opt = nullptr;
    try {
      opt = sub->get_option(option);
    } catch (const CLI::OptionNotFound&) {
      throw ConfigError("config key '" + key + "' is not valid for '" + sub->get_name() + "'");
    }
    if (opt->count() > 0) continue;
    if (key == "code") {
      flags.code.clear();
      std::istringstream words(value);
      for (std::string w; words >> w;) flags.code.push_back(w);
    } else if (auto it = scalar.find(key); it != scalar.end()) {
      *it->second = value;
    }
  }
}

std::vector<std::string> expand_codes(const std::vector<std::string>& selectors,
                                      const std::string& fallback) {
  std::vector<std::string> out;
  for (const std::string& s : selectors.empty() ? std::vector<std::string>{fallback} : selectors) {
    for (std::string& name : dephase::cli::parse_code_selector(s)) out.push_back(std::move(name));
  }
  return out;
}

std::uint64_t parse_seed(const std::string& text, std::uint64_t fallback) {
  if (text.empty()) return fallback;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("seed must be a nonnegative integer");
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << text;
}

int run_sweep(Flags& flags) {
  dephase::cli::SweepConfig cfg;
  cfg.codes = expand_codes(flags.code, "symmetric:4");
  std::string channel = flags.channel.empty() ? "phase" : flags.channel;
  std::string inline_params;
  if (const auto colon = channel.find(':'); colon != std::string::npos) {
    inline_params = channel.substr(colon + 1);
    channel = channel.substr(0, colon);
  }
  cfg.channel = channel;
  const std::string params = !inline_params.empty() ? inline_params
                             : channel == "amplitude" ? flags.gamma
                                                      : flags.lambda;
  if (params.empty()) {
    throw ConfigError(channel == "amplitude" ? "--gamma is required" : "--lambda is required");
  }
  cfg.parameters = dephase::cli::parse_number_list(params);
  cfg.seed = parse_seed(flags.seed, 1);
  cfg.amplitudes = dephase::cli::parse_amplitudes(flags.c0sq.empty() ? "0.5" : flags.c0sq, cfg.seed);
  if (!flags.k.empty()) cfg.rounds = dephase::cli::parse_int_list(flags.k);
  if (!flags.workers.empty()) {
    const long w = std::stol(flags.workers);
    if (w < 0) throw ConfigError("--workers must be >= 0");
    cfg.workers = static_cast<unsigned>(w);
  }
  cfg.out = flags.out;

  const auto reports = dephase::cli::run_sweep(cfg);
  write_output(cfg.out, dephase::cli::to_csv(reports));
  const std::string summary =
      dephase::cli::format_summary(dephase::cli::summarize(reports));
  if (cfg.out.empty() || cfg.out == "-") {
    std::cerr << summary;
  } else {
    std::cout << summary;
  }
  return kExitOk;
}

int run_verify(Flags& flags) {
  dephase::cli::VerifyOptions options;
  options.seed = parse_seed(flags.seed, 1);
  const auto checks = dephase::cli::run_verification(options);
  std::string text = dephase::cli::format_checks(checks, flags.verbose);
  bool ok = true;
  for (const auto& c : checks) ok = ok && c.passed;
  text += ok ? "verify: all checks passed\n" : "verify: FAILED\n";
  write_output(flags.out, text);
  return ok ? kExitOk : kExitVerifyFailed;
}

std::vector<int> symmetric_widths(const std::vector<std::string>& codes) {
  std::vector<int> out;
  for (const std::string& name : codes) {
    if (name.rfind("symmetric:", 0) == 0) out.push_back(std::stoi(name.substr(10)));
  }
  return out;
}

int run_formulas(Flags& flags) {
  const std::vector<int> widths = symmetric_widths(expand_codes(flags.code, "symmetric:2..10"));
  const std::vector<double> lambdas =
      dephase::cli::parse_number_list(flags.lambda.empty() ? "0.1" : flags.lambda);
  const std::vector<double> c0sqs =
      dephase::cli::parse_number_list(flags.c0sq.empty() ? "0.5" : flags.c0sq);
  const std::vector<int> ks = dephase::cli::parse_int_list(flags.k.empty() ? "1,2,4,8" : flags.k);
  const std::vector<double> epsilons =
      dephase::cli::parse_number_list(flags.epsilon.empty() ? "0.001" : flags.epsilon);
  const std::string which = flags.formula.empty() ? "all" : flags.formula;
  const std::vector<std::string> known{"p_accept", "j", "fidelity", "watchdog",
                                       "quadratic_watchdog", "two_qubit"};
  if (which != "all" && std::find(known.begin(), known.end(), which) == known.end()) {
    throw ConfigError("unknown formula '" + which + "'");
  }
  namespace an = dephase::analytics;
  const auto f = format_double;
  std::ostringstream os;
  auto wanted = [&](const std::string& name) { return which == "all" || which == name; };
  if (wanted("p_accept")) {
    os << "# p_accept\nN,lambda,p_accept\n";
    for (int n : widths)
      for (double l : lambdas) os << n << ',' << f(l) << ',' << f(an::p_accept_form(n, l)) << '\n';
  }
  if (wanted("j")) {
    os << "# j\nN,lambda,J,J_baseline,beats_baseline\n";
    for (int n : widths)
      for (double l : lambdas)
        os << n << ',' << f(l) << ',' << f(an::j_form(n, l)) << ',' << f(an::baseline_j_form(l))
           << ',' << (an::beats_baseline(n, l) ? 1 : 0) << '\n';
  }
  if (wanted("fidelity")) {
    os << "# fidelity\nN,lambda,c0sq,J,fidelity,fidelity_lower_bound\n";
    for (int n : widths)
      for (double l : lambdas)
        for (double c : c0sqs) {
          const double j = an::j_form(n, l);
          os << n << ',' << f(l) << ',' << f(c) << ',' << f(j) << ','
             << f(an::fidelity_form(j, c, 1 - c)) << ',' << f(an::fidelity_lower_bound(j)) << '\n';
        }
  }
  if (wanted("watchdog")) {
    os << "# watchdog\nN,exponent_per_round,k,p_accept_k,J_k\n";
    for (int n : widths)
      for (double l : lambdas)
        for (int k : ks) {
          const auto w = an::watchdog_forms(n, l, k);
          os << n << ',' << f(l) << ',' << k << ',' << f(w.p_accept) << ',' << f(w.j) << '\n';
        }
  }
  if (wanted("quadratic_watchdog")) {
    os << "# quadratic_watchdog\nN,epsilon,k,J_unsliced,J_sliced,J_unsliced_expansion,"
          "J_sliced_expansion\n";
    for (int n : widths)
      for (double e : epsilons)
        for (int k : ks) {
          const auto q = an::quadratic_watchdog_forms(n, e, k);
          os << n << ',' << f(e) << ',' << k << ',' << f(q.j_unsliced) << ',' << f(q.j_sliced)
             << ',' << f(q.j_unsliced_expansion) << ',' << f(q.j_sliced_expansion) << '\n';
        }
  }
  if (wanted("two_qubit")) {
    os << "# two_qubit\nlambda,c0sq,p_accept,fidelity_published\n";
    for (double l : lambdas)
      for (double c : c0sqs) {
        const auto t = an::two_qubit_forms(l, c, 1 - c);
        os << f(l) << ',' << f(c) << ',' << f(t.p_accept) << ',' << f(t.fidelity) << '\n';
      }
  }
  write_output(flags.out, os.str());
  return kExitOk;
}

int run_decompose(Flags& flags) {
  const std::vector<std::string> codes = expand_codes(flags.code, "symmetric:4");
  if (codes.size() != 1) throw ConfigError("decompose takes exactly one code");
  const auto code = dephase::cli::make_code(codes.front());
  const double lambda = flags.lambda.empty() ? 0.1 : dephase::cli::parse_number_list(flags.lambda).at(0);
  const auto amps = dephase::cli::parse_amplitudes(flags.c0sq.empty() ? "0.5" : flags.c0sq,
                                                   parse_seed(flags.seed, 1));
  if (amps.size() != 1) throw ConfigError("decompose takes exactly one amplitude choice");
  const dephase::QState psi = dephase::encode(*code, amps[0].c0(), amps[0].c1());
  const dephase::TrajectoryEnsemble ens = dephase::decompose(psi, lambda);

  std::ostringstream os;
  os << "# code " << code->name() << " lambda " << format_double(lambda) << "\n";
  os << "# source\n" << dephase::export_state(psi);
  std::size_t empty = 0;
  for (std::uint64_t n = 0; n < ens.size(); ++n) {
    const auto& br = ens.branch(n);
    const double w = br.weight();
    if (w == 0.0) {
      ++empty;
      continue;
    }
    os << "# branch " << n << ' ' << dephase::BitString(n, code->width()).to_string()
       << " weight " << format_double(w) << "\n";
    for (const auto& [index, amp] : br.terms) {
      if (amp == dephase::Complex(0.0)) continue;
      os << index << ' ' << dephase::BitString(index, code->width()).to_string() << ' '
         << format_double(amp.real()) << ' ' << format_double(amp.imag()) << "\n";
    }
  }
  os << "# zero-weight branches " << empty << "\n";
  write_output(flags.out, os.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coded transmission of a qubit through dephasing and decay channels"};
  app.require_subcommand(1);
  Flags flags;

  CLI::App* sweep = app.add_subcommand("sweep", "Simulate a parameter grid and emit CSV");
  CLI::App* verify = app.add_subcommand("verify", "Run the invariant suite");
  CLI::App* formulas = app.add_subcommand("formulas", "Print closed-form tables");
  CLI::App* decomp = app.add_subcommand("decompose", "Dump trajectory branches of a code state");

  for (CLI::App* sub : {sweep, formulas, decomp}) {
    sub->add_option("--code", flags.code,
                    "standard | two_qubit | symmetric:N[,N..] | symmetric:LO..HI (repeatable)");
    add_flag(sub, "lambda", flags.lambda, "Phase-damping exponents, comma separated");
    add_flag(sub, "c0sq", flags.c0sq,
             "Amplitudes: c0sq[@phase], uniform-grid:m, random:m (comma separated)");
  }
  for (CLI::App* sub : {sweep, formulas}) add_flag(sub, "k", flags.k, "Round counts");
  add_flag(sweep, "channel", flags.channel, "phase | amplitude | phase:<list> | amplitude:<list>");
  add_flag(sweep, "gamma", flags.gamma, "Amplitude-damping probabilities, comma separated");
  add_flag(sweep, "workers", flags.workers, "Worker threads (0 = all cores)");
  add_flag(formulas, "formula", flags.formula,
           "p_accept | j | fidelity | watchdog | quadratic_watchdog | two_qubit | all");
  add_flag(formulas, "epsilon", flags.epsilon, "Quadratic-schedule step errors");
  for (CLI::App* sub : {sweep, verify, decomp}) add_flag(sub, "seed", flags.seed, "RNG seed");
  for (CLI::App* sub : {sweep, verify, formulas, decomp}) {
    add_flag(sub, "out", flags.out, "Output path (default stdout)");
    add_flag(sub, "config", flags.config, "key = value file; flags take precedence");
  }
  verify->add_flag("--verbose,-v", flags.verbose, "Print max deltas per check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    CLI::App* chosen = app.get_subcommands().front();
    apply_config_file(chosen, flags);
    if (chosen == sweep) return run_sweep(flags);
    if (chosen == verify) return run_verify(flags);
    if (chosen == formulas) return run_formulas(flags);
    return run_decompose(flags);
  } catch (const dephase::cli::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
}
