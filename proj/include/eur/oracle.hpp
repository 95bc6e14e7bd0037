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
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "eur/bounds.hpp"
#include "eur/stochastic.hpp"

namespace eur {

/// Outcome distributions of an alternating sequence of projective measurements.
struct ChainTrace {
  std::vector<Basis> pattern;               // temporal order: pattern[0] is measured first
  std::vector<ProbabilityVector> stages;    // one distribution per measurement

  const ProbabilityVector& final_distribution() const { return stages.back(); }
};

/// Simulates the measurement sequence on the density matrix itself: each stage measures
/// q_i = ⟨x_i|ρ|x_i⟩ and replaces ρ by Σ_i q_i |x_i⟩⟨x_i|. Ū is never formed.
ChainTrace simulate_chain(const ComplexMatrix& u, const MixedState& state,
                          std::span<const Basis> pattern);

/// Temporal pattern of n+1 alternating measurements whose last stage is `last`.
std::vector<Basis> alternating_pattern(Basis last, int n);

struct DerivationCheck {
  int n = 0;
  double sum_entropies = 0.0;  // H(A) + H(B)
  double relative_slack = 0.0; // H(A)+H(B) − [D_a + D_b]/n − 2S
  double cross_slack = 0.0;    // H(A)+H(B) − [C_a + C_b]/(n+1) − 2n/(n+1)·S
  double ladder_slack = 0.0;   // [C_a + C_b]/(n+1) + 2n/(n+1)·S − l_n
  bool relative_ok = true;
  bool cross_ok = true;
  bool ladder_ok = true;

  bool all_ok() const noexcept { return relative_ok && cross_ok && ladder_ok; }
};

inline constexpr double kOracleSlack = 1e-9;

/// Checks the relative-entropy form, the cross-entropy form and the ladder step at order n.
DerivationCheck verify_derivation_chain(const ComplexMatrix& u, const MixedState& state, int n);

/// Same checks for n = 1..n_max, sharing one ladder evaluation.
std::vector<DerivationCheck> verify_derivation_chains(const ComplexMatrix& u,
                                                      const MixedState& state, int n_max);

struct LadderBoundCheck {
  int trials = 0;
  int violations = 0;
  double best_bound = 0.0;
  double min_entropy_sum = 0.0;
  double worst_slack = 0.0;  // min over trials of H(A)+H(B) − best_bound
  std::uint64_t worst_seed = 0;
};

/// Samples Haar frames for a thermal spectrum of the given entropy and compares H(A)+H(B)
/// against the best ladder value. Trial t uses seed + t.
LadderBoundCheck verify_ladder_bound(const ComplexMatrix& u, double entropy, int trials,
                                     std::uint64_t seed, const LadderOptions& options = {});

/// Random spectrum: normalized exponential variates, sorted non-increasing.
Spectrum random_spectrum(Index m, std::uint64_t seed);

struct OracleViolation {
  Index dim = 0;
  std::uint64_t seed = 0;
  int n = 0;
  std::string check;
  double slack = 0.0;
};

inline constexpr double kNoSlack = std::numeric_limits<double>::infinity();

struct OracleSuiteResult {
  int instances = 0;
  int ladder_violations = 0;
  int derivation_violations = 0;
  int chain_mismatches = 0;
  double worst_ladder_slack = kNoSlack;  // min of H(A)+H(B) − L_n
  double worst_relative_slack = kNoSlack;
  double worst_cross_slack = kNoSlack;
  double worst_step_slack = kNoSlack;
  double worst_chain_residual = 0.0;  // amplitude simulation vs chain_propagate
  std::vector<OracleViolation> violations;

  bool passed() const noexcept {
    return ladder_violations == 0 && derivation_violations == 0 && chain_mismatches == 0;
  }
};

/// For each dim and trial: Haar U (seed + t), random spectrum, Haar frame; checks
/// H(A)+H(B) ≥ L_n − 1e-9 and every derivation-chain inequality for n ≤ n_max, and that the
/// amplitude-level chains agree with chain_propagate to 1e-12.
OracleSuiteResult run_oracle_suite(std::span<const Index> dims, int trials, std::uint64_t seed,
                                   int n_max = 16);

/// Same checks against one fixed unitary with `trials` random states.
OracleSuiteResult run_oracle_suite(const ComplexMatrix& u, int trials, std::uint64_t seed,
                                   int n_max = 16);

}  // namespace eur
