// Copyright 2026 The kneg Authors
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

// Command-line front end: analyze arbitrary four-qubit states, instantiate
// the nine families, sweep parameter grids into CSV, and run the
// verification suites.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage/parse error,
// 3 domain or normalization error, 4 numerical failure.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "kneg/kneg.hpp"
#include "kneg/report_json.hpp"
#include "kneg/sweep.hpp"
#include "kneg/verify.hpp"

namespace {

using namespace kneg;

struct UsageError : Error {
  using Error::Error;
};

Complex parse_complex(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  if (s.empty()) throw UsageError("empty number");
  auto to_double = [](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    size_t used = 0;
    double v = std::stod(t, &used);
    if (used != t.size()) throw UsageError("cannot parse number '" + t + "'");
    return v;
  };
  try {
    if (s.back() != 'i' && s.back() != 'I') return Complex(to_double(s), 0.0);
    s.pop_back();
    // split at the last +/- that is neither leading nor an exponent sign
    size_t split = std::string::npos;
    for (size_t k = s.size(); k-- > 1;) {
      if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
        split = k;
        break;
      }
    }
    if (split == std::string::npos) return Complex(0.0, to_double(s));
    return Complex(to_double(s.substr(0, split)), to_double(s.substr(split)));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("cannot parse complex number");
  }
}

std::vector<Qubit> parse_qubits(const std::string& arg) {
  std::vector<Qubit> qs;
  for (char c : arg) {
    if (c == ',' || c == ' ') continue;
    qs.push_back(qubit_from_name(c, 4));
  }
  if (qs.empty()) throw UsageError("no qubits given");
  return qs;
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Error("cannot open output file " + out_path);
  f << text;
}

std::string reports_csv(const std::vector<nlohmann::json>& reports) {
  std::string csv = "qubit,quantity,value\n";
  char buf[64];
  for (const nlohmann::json& r : reports) {
    const std::string q = r.at("qubit").get<std::string>();
    std::snprintf(buf, sizeof(buf), "%.17g", r.at("n_global").get<double>());
    csv += q + ",ng," + buf + "\n";
    for (const auto& [name, value] : r.at("products").items()) {
      std::snprintf(buf, sizeof(buf), "%.17g", value.get<double>());
      csv += q + "," + name + "," + buf + "\n";
    }
  }
  return csv;
}

struct CommonOpts {
  Tolerances tol;
  uint64_t seed = 12345;
  std::string out;
  bool normalize = false;
  bool as_json = false;
  bool as_csv = false;
};

int cmd_analyze(const CommonOpts& common, const std::string& amps_arg,
                const std::string& file_arg, const std::string& qubits_arg) {
  std::vector<std::string> tokens;
  if (!amps_arg.empty() && !file_arg.empty())
    throw UsageError("give either --amps or --file, not both");
  if (!amps_arg.empty()) {
    std::stringstream ss(amps_arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) tokens.push_back(tok);
  } else if (!file_arg.empty()) {
    std::ifstream f(file_arg);
    if (!f) throw UsageError("cannot read " + file_arg);
    std::string tok;
    while (f >> tok) {
      std::stringstream ss(tok);
      std::string part;
      while (std::getline(ss, part, ','))
        if (!part.empty()) tokens.push_back(part);
    }
  } else {
    throw UsageError("analyze needs --amps or --file");
  }
  if (tokens.size() != 16)
    throw UsageError("expected 16 amplitudes, got " + std::to_string(tokens.size()));

  std::vector<Complex> amps;
  for (const std::string& t : tokens) amps.push_back(parse_complex(t));

  const auto t0 = std::chrono::steady_clock::now();
  PureState psi = common.normalize
                      ? PureState::normalized(4, std::move(amps))
                      : PureState(4, std::move(amps), common.tol.norm_tol);

  std::vector<nlohmann::json> reports;
  for (Qubit p : parse_qubits(qubits_arg))
    reports.push_back(report_to_json(build_report(psi, p, common.tol)));
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();

  if (common.as_csv) {
    write_output(common.out, reports_csv(reports));
  } else {
    nlohmann::json doc = make_report_document(
        amplitudes_input_json(psi, common.normalize), reports, ms);
    write_output(common.out, doc.dump(2) + "\n");
  }
  return 0;
}

int cmd_family(const CommonOpts& common, const std::string& name,
               const std::vector<std::string>& kv_params, const std::string& qubits_arg) {
  Family family;
  try {
    family = family_from_name(name);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  FamilyParams fp;
  fp.family = family;
  for (const std::string& kv : kv_params) {
    const size_t eq = kv.find('=');
    if (eq == std::string::npos)
      throw UsageError("family parameters look like a=0.5 or b=0.1+0.2i");
    fp.params[kv.substr(0, eq)] = parse_complex(kv.substr(eq + 1));
  }

  const auto t0 = std::chrono::steady_clock::now();
  PureState psi = build_family(fp, common.tol.norm_tol);
  std::vector<nlohmann::json> reports;
  for (Qubit p : parse_qubits(qubits_arg)) {
    NegativityReport rep = build_report(psi, p, common.tol);
    nlohmann::json rj = report_to_json(rep);
    attach_oracle(rj, rep, fp);
    reports.push_back(std::move(rj));
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();

  if (common.as_csv) {
    write_output(common.out, reports_csv(reports));
  } else {
    nlohmann::json doc = make_report_document(family_input_json(fp), reports, ms);
    write_output(common.out, doc.dump(2) + "\n");
  }
  return 0;
}

SweepAxis parse_axis(const std::string& arg) {
  const size_t eq = arg.find('=');
  if (eq == std::string::npos) throw UsageError("axis looks like a=0:1:101");
  SweepAxis ax;
  ax.name = arg.substr(0, eq);
  const std::string range = arg.substr(eq + 1);
  const size_t c1 = range.find(':'), c2 = range.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw UsageError("axis looks like a=0:1:101");
  try {
    ax.min = std::stod(range.substr(0, c1));
    ax.max = std::stod(range.substr(c1 + 1, c2 - c1 - 1));
    ax.steps = std::stoi(range.substr(c2 + 1));
  } catch (const std::exception&) {
    throw UsageError("axis looks like a=0:1:101");
  }
  return ax;
}

bool known_quantity_name(const std::string& q) {
  static const std::vector<std::string> fixed = {
      "ng",  "ng2", "e0",  "mu0", "mu1", "e2", "e3", "e4", "n2", "n3", "n4",
      "ng_e2", "ng_e3", "ng_e4", "ng_e2_minus_e0", "ng_e3_minus_e0", "ng_e4_minus_e0"};
  if (std::find(fixed.begin(), fixed.end(), q) != fixed.end()) return true;
  auto qb = [](char c) { return c >= 'A' && c <= 'D'; };
  if (q.size() == 8 && q.rfind("ng_e2_", 0) == 0) return qb(q[6]) && qb(q[7]);
  if (q.size() == 9 && q.rfind("ng_e3_", 0) == 0)
    return qb(q[6]) && qb(q[7]) && qb(q[8]);
  return false;
}

int cmd_sweep(const CommonOpts& common, int fig, const std::string& family_name_arg,
              const std::vector<std::string>& axes_args,
              const std::vector<std::string>& param_args, const std::string& qubit_arg,
              const std::vector<std::string>& quantities) {
  SweepSpec spec;
  if (fig != 0) {
    spec = figure_preset(fig);
  } else {
    if (family_name_arg.empty())
      throw UsageError("sweep needs --fig or --family with --axis");
    try {
      spec.family = family_from_name(family_name_arg);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    for (const std::string& a : axes_args) spec.axes.push_back(parse_axis(a));
    for (const std::string& kv : param_args) {
      const size_t eq = kv.find('=');
      if (eq == std::string::npos) throw UsageError("fixed parameters look like c=0.2");
      spec.fixed[kv.substr(0, eq)] = parse_complex(kv.substr(eq + 1));
    }
  }
  if (!quantities.empty()) spec.quantities = quantities;
  if (!qubit_arg.empty()) spec.reference = qubit_from_name(qubit_arg[0], 4);

  for (const std::string& q :
       spec.quantities.empty() ? default_sweep_quantities() : spec.quantities)
    if (!known_quantity_name(q)) throw UsageError("unknown quantity '" + q + "'");
  try {
    validate_sweep(spec);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }

  write_output(common.out, run_sweep_csv(spec, common.tol));
  return 0;
}

int cmd_verify(const CommonOpts& common, const std::string& suite) {
  std::vector<SuiteResult> results;
  if (suite == "all") {
    results = run_all_verify_suites(common.seed, common.tol);
  } else {
    try {
      results.push_back(run_verify_suite(suite, common.seed, common.tol));
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  bool all_ok = true;
  std::ostringstream out;
  for (const SuiteResult& r : results) {
    all_ok = all_ok && r.passed;
    char line[256];
    std::snprintf(line, sizeof(line), "%-24s %s  checks=%-5d max_residual=%.3e",
                  r.name.c_str(), r.passed ? "PASS" : "FAIL", r.checks,
                  r.max_residual);
    out << line;
    if (!r.note.empty()) out << "  (" << r.note << ")";
    out << "\n";
  }
  out << (all_ok ? "all suites passed" : "FAILURES present") << "\n";
  write_output(common.out, out.str());
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"negativity analysis of four-qubit pure states"};
  app.require_subcommand(1);
  app.fallthrough();  // accept global flags after the subcommand too

  CommonOpts common;
  app.add_option("--tol-norm", common.tol.norm_tol, "normalization tolerance");
  app.add_option("--tol-herm", common.tol.herm_tol, "Hermiticity tolerance");
  app.add_option("--tol-trace", common.tol.trace_tol, "trace tolerance");
  app.add_option("--tol-eig", common.tol.eig_tol, "eigensolver tolerance");
  app.add_option("--neg-threshold", common.tol.neg_threshold,
                 "eigenvalues within this of zero count as zero");
  app.add_option("--seed", common.seed, "seed for randomized verification suites");
  app.add_option("--out", common.out, "write output to this file instead of stdout");
  app.add_flag("--normalize", common.normalize, "rescale input amplitudes to unit norm");
  app.add_flag("--json", common.as_json, "emit JSON (default for analyze/family)");
  app.add_flag("--csv", common.as_csv, "emit CSV");

  auto* analyze = app.add_subcommand("analyze", "full report for explicit amplitudes");
  std::string amps_arg, file_arg, qubits_arg = "A,B,C,D";
  analyze->add_option("--amps", amps_arg,
                      "16 comma-separated amplitudes, e.g. 0.5,0,0.5i,...");
  analyze->add_option("--file", file_arg, "file holding 16 whitespace- or "
                                          "comma-separated amplitudes");
  analyze->add_option("--qubits", qubits_arg, "reference qubits, e.g. A,D");

  auto* family = app.add_subcommand("family", "build a family state and report it");
  std::string family_name_arg;
  std::vector<std::string> family_params;
  std::string family_qubits = "A,B,C,D";
  family->add_option("name", family_name_arg,
                     "gabcd labc2 la2b2 la2-0-31 lab3 la4 l0-53 l0-71 l0-31-0-31")
      ->required();
  family->add_option("params", family_params, "parameters as key=value");
  family->add_option("--qubits", family_qubits, "reference qubits, e.g. A,D");

  auto* sweep = app.add_subcommand("sweep", "grid a family into CSV");
  int fig = 0;
  std::string sweep_family, sweep_qubit;
  std::vector<std::string> sweep_axes, sweep_params, sweep_quantities;
  sweep->add_option("--fig", fig, "figure preset 1..5")->check(CLI::Range(1, 5));
  sweep->add_option("--family", sweep_family, "family to sweep");
  sweep->add_option("--axis", sweep_axes, "axis as name=min:max:steps (1 or 2)");
  sweep->add_option("--param", sweep_params, "fixed parameter as key=value");
  sweep->add_option("--qubit", sweep_qubit, "reference qubit (default A)");
  sweep->add_option("--quantity", sweep_quantities, "columns to emit");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::string suite = "all";
  verify->add_option("suite", suite, "suite name or 'all'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) return cmd_analyze(common, amps_arg, file_arg, qubits_arg);
    if (*family) return cmd_family(common, family_name_arg, family_params, family_qubits);
    if (*sweep)
      return cmd_sweep(common, fig, sweep_family, sweep_axes, sweep_params, sweep_qubit,
                       sweep_quantities);
    if (*verify) return cmd_verify(common, suite);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const NormalizationError& e) {
    std::cerr << "normalization error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 4;
  } catch (const ContractError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
