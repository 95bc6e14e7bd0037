// Copyright 2026 The eur-ladder Authors
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

// eur: bound sweeps, single-point reports, crossovers and self-verification.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eur/bounds.hpp"
#include "eur/oracle.hpp"
#include "eur/report_io.hpp"
#include "eur/svg_plot.hpp"
#include "eur/sweep.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CommonOptions {
  std::string family = "qubit";
  long dim = 2;
  double entropy = 0.0;
  int n_max = 64;
  int k_star = 2;
  std::string bounds = "ladder,mu,l1,dev,maj";
  std::string log_base = "nats";
  std::uint64_t seed = 0;
  std::string out;
  std::vector<std::string> formats;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--family", o.family, "qubit | qft | spin | haar")->capture_default_str();
  cmd->add_option("--dim", o.dim, "Hilbert-space dimension M")->capture_default_str();
  cmd->add_option("--entropy", o.entropy, "von Neumann entropy of the state (nats)")
      ->capture_default_str();
  cmd->add_option("--nmax", o.n_max, "largest ladder order")->capture_default_str();
  cmd->add_option("--kstar", o.k_star, "order of the majorization bound")->capture_default_str();
  cmd->add_option("--bounds", o.bounds, "comma list of ladder,mu,l1,dev,maj")
      ->capture_default_str();
  cmd->add_option("--log-base", o.log_base, "nats | bits")->capture_default_str();
  cmd->add_option("--seed", o.seed, "seed for the haar family")->capture_default_str();
  cmd->add_option("--out", o.out, "output path (stdout when omitted)");
  cmd->add_option("--format", o.formats, "csv | json | svg, repeatable");
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) items.push_back(item);
  return items;
}

eur::LogBase parse_log_base(const std::string& s) {
  if (s == "nats") return eur::LogBase::Nats;
  if (s == "bits") return eur::LogBase::Bits;
  throw UsageError("--log-base must be nats or bits, got '" + s + "'");
}

eur::SweepConfig make_config(const CommonOptions& o, const std::optional<std::string>& range) {
  eur::SweepConfig c;
  try {
    c.family = eur::parse_family(o.family);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  c.dim = o.dim;
  if (range) {
    try {
      c.range = eur::parse_range(*range);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else {
    auto [a, b] = eur::default_range(c.family);
    c.range = eur::ParamRange{a, b, 101};
  }
  c.entropy = o.entropy;
  c.n_max = o.n_max;
  c.k_star = o.k_star;
  c.bounds = split_list(o.bounds);
  c.log_base = parse_log_base(o.log_base);
  c.seed = o.seed;
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return c;
}

std::string render(const std::string& format, const std::vector<eur::BoundReport>& reports,
                   const eur::SweepConfig& config) {
  if (format == "csv") return eur::to_csv(reports, config.log_base);
  if (format == "json") return eur::to_json(reports, eur::metadata_for(config)).dump(2) + "\n";
  eur::PlotOptions plot;
  plot.bounds = config.bounds;
  plot.log_base = config.log_base;
  const bool angle = config.family == eur::Family::Qubit || config.family == eur::Family::Spin;
  plot.x_label = angle ? "theta" : "beta";
  char title[128];
  std::snprintf(title, sizeof title, "%s, M = %ld, S = %.3g", eur::family_name(config.family).c_str(),
                static_cast<long>(config.dim), config.entropy);
  plot.title = title;
  return eur::render_svg(reports, plot);
}

void emit(const std::vector<std::string>& requested, const std::string& out,
          const std::vector<eur::BoundReport>& reports, const eur::SweepConfig& config) {
  std::vector<std::string> formats = requested.empty() ? std::vector<std::string>{"csv"} : requested;
  for (const auto& f : formats)
    if (f != "csv" && f != "json" && f != "svg") throw UsageError("unknown format '" + f + "'");

  if (out.empty()) {
    if (formats.size() > 1) throw UsageError("several formats need --out");
    std::cout << render(formats.front(), reports, config);
    return;
  }
  for (const auto& f : formats) {
    fs::path path = out;
    if (formats.size() > 1) path.replace_extension("." + f);
    eur::write_text_file(path, render(f, reports, config));
  }
}

int run_sweep(const CommonOptions& o, const std::optional<std::string>& range, unsigned threads) {
  eur::SweepConfig config = make_config(o, range);
  config.threads = threads;
  const auto reports = eur::run_sweep(config);
  emit(o.formats, o.out, reports, config);
  return 0;
}

int run_report(const CommonOptions& o, double param) {
  std::ostringstream range;
  range.precision(17);
  range << param << ':' << param << ":1";
  eur::SweepConfig config = make_config(o, range.str());
  config.threads = 1;
  const auto reports = eur::run_sweep(config);
  CommonOptions with_default = o;
  if (with_default.formats.empty()) with_default.formats = {"json"};
  emit(with_default.formats, o.out, reports, config);
  return 0;
}

void print_suite(const eur::OracleSuiteResult& r) {
  std::printf("instances            %d\n", r.instances);
  std::printf("ladder violations    %d\n", r.ladder_violations);
  std::printf("derivation violations %d\n", r.derivation_violations);
  std::printf("chain mismatches     %d\n", r.chain_mismatches);
  std::printf("worst ladder slack   %.3e\n", r.worst_ladder_slack);
  std::printf("worst relative slack %.3e\n", r.worst_relative_slack);
  std::printf("worst cross slack    %.3e\n", r.worst_cross_slack);
  std::printf("worst step slack     %.3e\n", r.worst_step_slack);
  std::printf("worst chain residual %.3e\n", r.worst_chain_residual);
  const std::size_t shown = std::min<std::size_t>(r.violations.size(), 20);
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& v = r.violations[i];
    std::printf("VIOLATION dim=%ld seed=%llu n=%d check=%s slack=%.3e\n", static_cast<long>(v.dim),
                static_cast<unsigned long long>(v.seed), v.n, v.check.c_str(), v.slack);
  }
  if (r.violations.size() > shown)
    std::printf("... %zu more violations\n", r.violations.size() - shown);
}

int run_verify(const std::string& dims_text, int trials, std::uint64_t seed, int n_max,
               const std::string& unitary_file) {
  if (trials <= 0) throw UsageError("--trials must be positive");
  if (n_max < 1) throw UsageError("--nmax must be at least 1");
  eur::OracleSuiteResult result;
  if (!unitary_file.empty()) {
    eur::ComplexMatrix u;
    try {
      u = eur::read_unitary_file(unitary_file);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    std::printf("unitary %s (M = %ld), %d trials, seed %llu\n", unitary_file.c_str(),
                static_cast<long>(u.rows()), trials, static_cast<unsigned long long>(seed));
    result = eur::run_oracle_suite(u, trials, seed, n_max);
  } else {
    std::vector<eur::Index> dims;
    for (const auto& d : split_list(dims_text)) {
      long m = 0;
      try {
        m = std::stol(d);
      } catch (const std::exception&) {
        throw UsageError("--dims entry '" + d + "' is not an integer");
      }
      if (m < 2) throw UsageError("--dims entries must be at least 2");
      dims.push_back(m);
    }
    if (dims.empty()) throw UsageError("--dims is empty");
    std::printf("dims %s, %d trials each, seed %llu\n", dims_text.c_str(), trials,
                static_cast<unsigned long long>(seed));
    result = eur::run_oracle_suite(dims, trials, seed, n_max);
  }
  print_suite(result);
  std::printf("%s\n", result.passed() ? "OK" : "FAILED");
  return result.passed() ? 0 : kExitViolation;
}

int run_crossover(const std::string& family, long dim, const std::string& pair, double tol,
                  const std::optional<std::string>& range, std::uint64_t seed) {
  eur::Family f;
  try {
    f = eur::parse_family(family);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto parts = split_list(pair);
  if (parts.size() != 2) throw UsageError("--pair expects N1,N2");
  const int n1 = std::stoi(parts[0]);
  const int n2 = std::stoi(parts[1]);
  std::optional<eur::ParamRange> scan;
  if (range) scan = eur::parse_range(*range);
  const double x = eur::crossover(f, dim, n1, n2, tol, scan, seed);
  std::printf("%.12g\n", x);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropic uncertainty bound ladders for pairs of bases"};
  app.require_subcommand(1);

  CommonOptions sweep_opts;
  std::optional<std::string> sweep_range;
  unsigned threads = 0;
  auto* sweep = app.add_subcommand("sweep", "evaluate every bound over a parameter grid");
  add_common(sweep, sweep_opts);
  sweep->add_option("--range", sweep_range, "START:END:COUNT");
  sweep->add_option("--threads", threads, "worker threads (0: all cores)");

  CommonOptions report_opts;
  double param = 0.0;
  auto* report = app.add_subcommand("report", "bound report at a single parameter value");
  add_common(report, report_opts);
  report->add_option("--param", param, "theta or beta")->required();

  std::string dims = "2,3,4,5";
  int trials = 1000;
  std::uint64_t verify_seed = 0;
  int verify_nmax = 16;
  std::string unitary_file;
  auto* verify = app.add_subcommand("verify", "run the oracle suites");
  verify->add_option("--dims", dims, "comma list of dimensions")->capture_default_str();
  verify->add_option("--trials", trials, "draws per dimension")->capture_default_str();
  verify->add_option("--seed", verify_seed, "base seed")->capture_default_str();
  verify->add_option("--nmax", verify_nmax, "largest ladder order checked")->capture_default_str();
  verify->add_option("--unitary", unitary_file, "JSON file with {\"real\": [[..]], \"imag\": [[..]]}");

  std::string cross_family = "qubit";
  long cross_dim = 2;
  std::string pair = "1,2";
  double tol = 1e-9;
  std::optional<std::string> cross_range;
  std::uint64_t cross_seed = 0;
  auto* cross = app.add_subcommand("crossover", "parameter where U_n1 = U_n2");
  cross->add_option("--family", cross_family)->capture_default_str();
  cross->add_option("--dim", cross_dim)->capture_default_str();
  cross->add_option("--pair", pair, "N1,N2")->capture_default_str();
  cross->add_option("--tol", tol)->capture_default_str();
  cross->add_option("--range", cross_range, "scan grid START:END:COUNT");
  cross->add_option("--seed", cross_seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*sweep) return run_sweep(sweep_opts, sweep_range, threads);
    if (*report) return run_report(report_opts, param);
    if (*verify) return run_verify(dims, trials, verify_seed, verify_nmax, unitary_file);
    if (*cross) return run_crossover(cross_family, cross_dim, pair, tol, cross_range, cross_seed);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return 0;
}
