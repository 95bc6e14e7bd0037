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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eur/bounds.hpp"
#include "eur/linalg.hpp"

namespace eur {

enum class Family { Qubit, Qft, Spin, Haar };

Family parse_family(const std::string& name);
std::string family_name(Family f);

/// Default parameter interval of a family: θ ∈ [0, π/2] or β ∈ [0, 2].
std::pair<double, double> default_range(Family f);

/// A one-parameter unitary family with its spectral data computed once.
///
/// qubit: rotation by θ (M = 2); qft: F_M^β; spin: exp(−2iθJ_y); haar: H^β for a seeded
/// Haar unitary H.
class UnitaryFamily {
 public:
  UnitaryFamily(Family family, Index dim, std::uint64_t seed = 0);

  ComplexMatrix at(double param) const;
  Family family() const noexcept { return family_; }
  Index dim() const noexcept { return dim_; }
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  Family family_;
  Index dim_;
  std::uint64_t seed_;
  RealVector spectral_values_;  // eigenphases (qft, haar) or J_y eigenvalues (spin)
  ComplexMatrix spectral_vectors_;
};

enum class LogBase { Nats, Bits };

struct ParamRange {
  double start = 0.0;
  double end = 0.0;
  int count = 1;

  std::vector<double> grid() const;
};

/// Parses "START:END:COUNT".
ParamRange parse_range(const std::string& text);

struct SweepConfig {
  Family family = Family::Qubit;
  Index dim = 2;
  ParamRange range;
  double entropy = 0.0;
  int n_max = 64;
  int k_star = 2;
  std::vector<std::string> bounds{"ladder", "mu", "l1", "dev", "maj"};
  LogBase log_base = LogBase::Nats;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0: hardware concurrency

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
};

/// One report per grid point, in grid order. Points are evaluated concurrently.
std::vector<BoundReport> run_sweep(const SweepConfig& config);

/// Parameter where U_{n1} = U_{n2}, located by a scan for the first sign change of
/// U_{n1} − U_{n2} followed by bisection down to `tol`.
double crossover(Family family, Index dim, int n1, int n2, double tol,
                 std::optional<ParamRange> scan = std::nullopt, std::uint64_t seed = 0);

/// U_n = −log(s_n)/(n+1) for n = 1..n_max at one parameter value.
std::vector<double> state_independent_terms(const ComplexMatrix& u, int n_max);

}  // namespace eur
