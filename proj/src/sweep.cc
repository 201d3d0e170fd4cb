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

#include "dephase/sweep.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "dephase/trajectories.h"

namespace dephase::cli {
namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(const std::string& token) {
  double value = 0.0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || token.empty()) {
    throw ConfigError("not a number: '" + token + "'");
  }
  return value;
}

long long parse_integer(const std::string& token) {
  long long value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || token.empty()) {
    throw ConfigError("not an integer: '" + token + "'");
  }
  return value;
}

int code_width(const std::string& name) {
  if (name == "standard") return 1;
  if (name == "two_qubit") return 2;
  return static_cast<int>(parse_integer(name.substr(name.find(':') + 1)));
}

std::string family_of(const std::string& code_name) {
  const auto colon = code_name.find(':');
  return colon == std::string::npos ? code_name : code_name.substr(0, colon);
}

// Rough cost model: one dense pass over the 4^N density matrix per round.
constexpr double kMaxGridWork = 2e10;

}  // namespace

Complex AmplitudeChoice::c0() const { return {std::sqrt(c0sq), 0.0}; }

Complex AmplitudeChoice::c1() const { return std::polar(std::sqrt(1.0 - c0sq), phase); }

std::vector<std::string> parse_code_selector(const std::string& text) {
  const std::string s = trim(text);
  if (s == "standard" || s == "two_qubit") return {s};
  const std::string prefix = "symmetric:";
  if (s.rfind(prefix, 0) != 0) {
    throw ConfigError("unknown code '" + s + "' (expected standard, two_qubit or symmetric:N)");
  }
  const std::string body = s.substr(prefix.size());
  std::vector<long long> widths;
  if (const auto dots = body.find(".."); dots != std::string::npos) {
    const long long lo = parse_integer(trim(body.substr(0, dots)));
    const long long hi = parse_integer(trim(body.substr(dots + 2)));
    if (lo > hi) throw ConfigError("empty width range in '" + s + "'");
    for (long long n = lo; n <= hi; ++n) {
      if (n % 2 == 0) widths.push_back(n);
    }
  } else {
    for (const std::string& tok : split(body, ',')) widths.push_back(parse_integer(tok));
  }
  if (widths.empty()) throw ConfigError("no code widths in '" + s + "'");
  std::vector<std::string> out;
  for (long long n : widths) {
    if (n < 2 || n % 2 != 0 || n > kMaxSymmetricCodeWidth) {
      throw CapacityError("infeasible symmetric code width " + std::to_string(n) +
                          ": need even N in [2, " + std::to_string(kMaxSymmetricCodeWidth) + "]");
    }
    out.push_back(prefix + std::to_string(n));
  }
  return out;
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  for (const std::string& tok : split(text, ',')) out.push_back(parse_double(tok));
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const std::string& tok : split(text, ',')) {
    out.push_back(static_cast<int>(parse_integer(tok)));
  }
  return out;
}

std::vector<AmplitudeChoice> parse_amplitudes(const std::string& text, std::uint64_t seed) {
  std::vector<AmplitudeChoice> out;
  std::mt19937_64 engine(seed);
  for (const std::string& tok : split(text, ',')) {
    if (tok.rfind("uniform-grid:", 0) == 0) {
      const long long m = parse_integer(tok.substr(13));
      if (m < 1) throw ConfigError("uniform-grid needs m >= 1");
      for (long long i = 1; i <= m; ++i) {
        out.push_back({static_cast<double>(i) / static_cast<double>(m + 1), 0.0});
      }
    } else if (tok.rfind("random:", 0) == 0) {
      const long long m = parse_integer(tok.substr(7));
      if (m < 1) throw ConfigError("random needs m >= 1");
      for (long long i = 0; i < m; ++i) {
        const double c0sq = uniform_unit(engine);
        const double phase = 2.0 * std::numbers::pi * uniform_unit(engine);
        out.push_back({c0sq, phase});
      }
    } else if (const auto at = tok.find('@'); at != std::string::npos) {
      out.push_back({parse_double(trim(tok.substr(0, at))), parse_double(trim(tok.substr(at + 1)))});
    } else {
      out.push_back({parse_double(tok), 0.0});
    }
  }
  for (const AmplitudeChoice& a : out) {
    if (!(a.c0sq >= 0.0 && a.c0sq <= 1.0)) throw ConfigError("c0sq must lie in [0, 1]");
  }
  return out;
}

std::shared_ptr<const Code> make_code(const std::string& name) {
  if (name == "standard") return std::make_shared<const Code>(standard_code());
  if (name == "two_qubit") return std::make_shared<const Code>(two_qubit_code());
  const std::vector<std::string> expanded = parse_code_selector(name);
  if (expanded.size() != 1) throw ConfigError("code name must select exactly one code");
  return std::make_shared<const Code>(symmetric_code(code_width(expanded.front())));
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string content = trim(line);
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(line_number) + ": expected key = value");
    }
    out[trim(content.substr(0, eq))] = trim(content.substr(eq + 1));
  }
  return out;
}

std::vector<ProtocolReport> run_sweep(const SweepConfig& config) {
  if (config.codes.empty()) throw ConfigError("no codes selected");
  if (config.parameters.empty()) throw ConfigError("channel parameter list is empty");
  if (config.amplitudes.empty()) throw ConfigError("amplitude list is empty");
  if (config.rounds.empty()) throw ConfigError("round list is empty");
  if (config.channel != "phase" && config.channel != "amplitude") {
    throw ConfigError("channel must be 'phase' or 'amplitude'");
  }
  for (double p : config.parameters) {
    const bool ok = config.channel == "phase" ? (p >= 0.0 && std::isfinite(p))
                                              : (p >= 0.0 && p <= 1.0);
    if (!ok) throw ConfigError("channel parameter " + format_double(p) + " out of domain");
  }
  for (int k : config.rounds) {
    if (k < 1) throw ConfigError("rounds must be >= 1");
  }

  std::vector<std::shared_ptr<const Code>> codes;
  double work = 0.0;
  const double points_per_code = static_cast<double>(config.parameters.size()) *
                                 static_cast<double>(config.amplitudes.size());
  for (const std::string& name : config.codes) {
    codes.push_back(make_code(name));
    double rounds_total = 0.0;
    for (int k : config.rounds) rounds_total += k;
    const double dim = static_cast<double>(codes.back()->dimension());
    work += points_per_code * rounds_total * dim * dim;
  }
  if (work > kMaxGridWork) {
    throw CapacityError("sweep grid too large for dense simulation; reduce widths or points");
  }

  std::vector<ProtocolRun> runs;
  for (const auto& code : codes) {
    for (double p : config.parameters) {
      for (const AmplitudeChoice& a : config.amplitudes) {
        for (int k : config.rounds) {
          ProtocolRun run;
          run.code = code;
          if (config.channel == "phase") {
            run.channel = PhaseDamping{p};
          } else {
            run.channel = AmplitudeDamping{p};
          }
          run.c0 = a.c0();
          run.c1 = a.c1();
          run.rounds = k;
          runs.push_back(std::move(run));
        }
      }
    }
  }

  std::vector<ProtocolReport> reports(runs.size());
  unsigned workers = config.workers == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                         : config.workers;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(runs.size()));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  auto work_loop = [&](unsigned id) {
    try {
      for (std::size_t i = next++; i < runs.size(); i = next++) {
        reports[i] = run_periodic(runs[i]);
      }
    } catch (...) {
      errors[id] = std::current_exception();
      next = runs.size();
    }
  };
  if (workers <= 1) {
    work_loop(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work_loop, id);
    for (std::thread& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return reports;
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string csv_header() {
  return "code_name,N,channel,lambda_or_gamma,k,c0_re,c0_im,c1_re,c1_im,"
         "p_accept_meas,p_accept_form,J_meas,J_form,fidelity_meas,fidelity_form,"
         "p_accept_delta,J_delta,fidelity_delta";
}

std::string csv_row(const ProtocolReport& r) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  const double j_meas = r.j_measured ? r.j_measured->real() : nan;
  const double p_form = r.p_accept_closed_form.value_or(nan);
  const double j_form = r.j_closed_form.value_or(nan);
  const double f_form = r.fidelity_closed_form.value_or(nan);
  const std::vector<std::string> fields{
      r.code_name,
      std::to_string(r.width),
      r.channel,
      format_double(r.channel_parameter),
      std::to_string(r.rounds),
      format_double(r.c0.real()),
      format_double(r.c0.imag()),
      format_double(r.c1.real()),
      format_double(r.c1.imag()),
      format_double(r.p_accept_measured),
      format_double(p_form),
      format_double(j_meas),
      format_double(j_form),
      format_double(r.fidelity_measured),
      format_double(f_form),
      format_double(r.p_accept_measured - p_form),
      format_double(j_meas - j_form),
      format_double(r.fidelity_measured - f_form),
  };
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += fields[i];
  }
  return out;
}

std::string to_csv(const std::vector<ProtocolReport>& reports) {
  std::string out = csv_header() + "\n";
  for (const ProtocolReport& r : reports) out += csv_row(r) + "\n";
  return out;
}

std::vector<FormulaDelta> summarize(const std::vector<ProtocolReport>& reports, double tolerance) {
  std::vector<FormulaDelta> out;
  auto record = [&](const std::string& name, double delta, const std::string& note) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const FormulaDelta& d) { return d.formula == name; });
    if (it == out.end()) {
      out.push_back(FormulaDelta{name, 0, 0.0, true, note});
      it = std::prev(out.end());
    }
    ++it->rows;
    it->max_abs_delta = std::max(it->max_abs_delta, std::abs(delta));
    it->within_tolerance = it->within_tolerance && std::abs(delta) <= tolerance;
  };
  for (const ProtocolReport& r : reports) {
    if (r.degenerate) continue;
    const std::string key =
        family_of(r.code_name) + "." + r.channel + (r.rounds > 1 ? ".periodic" : "");
    const bool published_two_qubit = family_of(r.code_name) == "two_qubit";
    if (r.p_accept_closed_form) {
      record(key + ".p_accept", r.p_accept_measured - *r.p_accept_closed_form, "");
    }
    if (r.j_closed_form && r.j_measured) {
      record(key + ".J", r.j_measured->real() - *r.j_closed_form, "");
    }
    if (r.fidelity_closed_form) {
      record(key + ".fidelity", r.fidelity_measured - *r.fidelity_closed_form,
             published_two_qubit
                 ? "published expression 1 - 2|c0|^2|c1|^2/cosh(lambda); simulation gives "
                   "1 - 2|c0|^2|c1|^2 (1 - 1/cosh(lambda))"
                 : "");
    }
  }
  return out;
}

std::string format_summary(const std::vector<FormulaDelta>& deltas, double tolerance) {
  std::ostringstream os;
  char tol[32];
  std::snprintf(tol, sizeof tol, "%g", tolerance);
  os << "# summary: max |measured - closed form| per formula, tolerance " << tol << "\n";
  for (const FormulaDelta& d : deltas) {
    os << (d.within_tolerance ? "PASS " : (d.note.empty() ? "FAIL " : "DIFF "));
    os << d.formula << " rows=" << d.rows << " max_delta=" << format_double(d.max_abs_delta);
    if (!d.note.empty()) os << " note: " << d.note;
    os << "\n";
  }
  return os.str();
}

}  // namespace dephase::cli
