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

#include "eur/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "eur/generators.hpp"
#include "eur/stochastic.hpp"

namespace eur {

Family parse_family(const std::string& name) {
  if (name == "qubit") return Family::Qubit;
  if (name == "qft") return Family::Qft;
  if (name == "spin") return Family::Spin;
  if (name == "haar") return Family::Haar;
  throw std::invalid_argument("unknown family '" + name + "' (expected qubit|qft|spin|haar)");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Qubit: return "qubit";
    case Family::Qft: return "qft";
    case Family::Spin: return "spin";
    case Family::Haar: return "haar";
  }
  return "unknown";
}

std::pair<double, double> default_range(Family f) {
  if (f == Family::Qubit || f == Family::Spin) return {0.0, std::numbers::pi / 2.0};
  return {0.0, 2.0};
}

UnitaryFamily::UnitaryFamily(Family family, Index dim, std::uint64_t seed)
    : family_(family), dim_(dim), seed_(seed) {
  switch (family) {
    case Family::Qubit:
      if (dim != 2) throw std::invalid_argument("qubit family requires dim 2");
      break;
    case Family::Qft: {
      UnitaryEigen eig = eig_unitary(qft(dim));
      spectral_values_ = std::move(eig.phases);
      spectral_vectors_ = std::move(eig.eigenvectors);
      break;
    }
    case Family::Haar: {
      UnitaryEigen eig = eig_unitary(haar_random(dim, seed));
      spectral_values_ = std::move(eig.phases);
      spectral_vectors_ = std::move(eig.eigenvectors);
      break;
    }
    case Family::Spin: {
      HermitianEigenDecomposition eig = eigh_hermitian(spin_y(dim));
      spectral_values_ = std::move(eig.eigenvalues);
      spectral_vectors_ = std::move(eig.eigenvectors);
      break;
    }
  }
}

ComplexMatrix UnitaryFamily::at(double param) const {
  if (family_ == Family::Qubit) return qubit_rotation(param);
  ComplexVector diag(dim_);
  for (Index k = 0; k < dim_; ++k) {
    const double phase = family_ == Family::Spin ? -2.0 * param * spectral_values_(k)
                                                 : param * spectral_values_(k);
    diag(k) = std::polar(1.0, phase);
  }
  return spectral_vectors_ * diag.asDiagonal() * spectral_vectors_.adjoint();
}

std::vector<double> ParamRange::grid() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  if (count == 1) {
    out.push_back(start);
    return out;
  }
  for (int i = 0; i < count; ++i)
    out.push_back(start + (end - start) * static_cast<double>(i) / (count - 1));
  return out;
}

ParamRange parse_range(const std::string& text) {
  std::stringstream ss(text);
  std::string a;
  std::string b;
  std::string c;
  if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c) ||
      a.empty() || b.empty() || c.empty())
    throw std::invalid_argument("range must look like START:END:COUNT, got '" + text + "'");
  ParamRange r;
  try {
    std::size_t used = 0;
    r.start = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    r.end = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    r.count = std::stoi(c, &used);
    if (used != c.size()) throw std::invalid_argument(c);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("range must look like START:END:COUNT, got '" + text + "'");
  }
  if (r.count < 1) throw std::invalid_argument("range count must be >= 1");
  if (!(r.start <= r.end)) throw std::invalid_argument("range start must be <= end");
  return r;
}

void SweepConfig::validate() const {
  if (range.count < 1) throw std::invalid_argument("range count must be >= 1");
  if (!(range.start <= range.end)) throw std::invalid_argument("range start must be <= end");
  if (dim < 2) throw std::invalid_argument("dim must be >= 2");
  if (family == Family::Qubit && dim != 2) throw std::invalid_argument("qubit family requires dim 2");
  const double log_m = std::log(static_cast<double>(dim));
  if (!(entropy >= 0.0) || entropy > log_m + 1e-12)
    throw std::invalid_argument("entropy must lie in [0, log M] = [0, " + std::to_string(log_m) + "]");
  if (n_max < 1) throw std::invalid_argument("nmax must be >= 1");
  if (k_star < 1) throw std::invalid_argument("kstar must be >= 1");
  if (k_star > 2 && dim > 8) throw std::invalid_argument("kstar > 2 needs dim <= 8");
  static const std::vector<std::string> known{"ladder", "mu", "l1", "dev", "maj"};
  for (const std::string& b : bounds)
    if (std::find(known.begin(), known.end(), b) == known.end())
      throw std::invalid_argument("unknown bound '" + b + "' (expected ladder,mu,l1,dev,maj)");
}

std::vector<BoundReport> run_sweep(const SweepConfig& config) {
  config.validate();
  const UnitaryFamily family(config.family, config.dim, config.seed);
  const std::vector<double> grid = config.range.grid();
  const ReportConfig report_config{LadderOptions{config.n_max, 1e-9}, config.k_star};

  std::vector<BoundReport> reports(grid.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        GeneratorDescriptor desc{family_name(config.family), config.dim, grid[i], config.seed};
        reports[i] = full_report(family.at(grid[i]), config.entropy, report_config, std::move(desc));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  unsigned threads = config.threads ? config.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1u, static_cast<unsigned>(grid.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return reports;
}

std::vector<double> state_independent_terms(const ComplexMatrix& u, int n_max) {
  const std::vector<double> s = s_sequence(unistochastic(u), n_max);
  std::vector<double> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = -std::log(s[i]) / static_cast<double>(i + 2);
  return out;
}

double crossover(Family family, Index dim, int n1, int n2, double tol,
                 std::optional<ParamRange> scan, std::uint64_t seed) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("crossover: orders must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("crossover: tol must be positive");
  if (!scan) {
    const auto [lo, hi] = default_range(family);
    scan = ParamRange{lo, hi, 1000};
  }
  if (scan->count < 2) throw std::invalid_argument("crossover: scan needs at least 2 points");

  const UnitaryFamily fam(family, dim, seed);
  const int n_max = std::max(n1, n2);
  auto gap = [&](double p) {
    const std::vector<double> u = state_independent_terms(fam.at(p), n_max);
    return u[static_cast<std::size_t>(n1 - 1)] - u[static_cast<std::size_t>(n2 - 1)];
  };

  const std::vector<double> grid = scan->grid();
  double prev_p = grid.front();
  double prev_g = gap(prev_p);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double p = grid[i];
    const double g = gap(p);
    if (prev_g * g < 0.0) {
      double lo = prev_p;
      double hi = p;
      double g_lo = prev_g;
      for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double g_mid = gap(mid);
        if (g_mid == 0.0) return mid;
        if ((g_mid < 0.0) == (g_lo < 0.0)) {
          lo = mid;
          g_lo = g_mid;
        } else {
          hi = mid;
        }
      }
      return 0.5 * (lo + hi);
    }
    prev_p = p;
    prev_g = g;
  }
  throw std::runtime_error("crossover: U_" + std::to_string(n1) + " - U_" + std::to_string(n2) +
                           " does not change sign on [" + std::to_string(grid.front()) + ", " +
                           std::to_string(grid.back()) + "]");
}

}  // namespace eur
