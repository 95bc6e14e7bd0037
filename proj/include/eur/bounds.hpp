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
#include <string>
#include <vector>

#include "eur/linalg.hpp"
#include "eur/stochastic.hpp"

namespace eur {

/// Order label of the synthetic n → ∞ ladder entry, whose value is 2S(ρ).
inline constexpr int kAsymptoticOrder = std::numeric_limits<int>::max();

struct LadderEntry {
  int n = 0;
  double s_n = 0.0;           // product of the largest entries of the two n-factor chains
  double u_n = 0.0;           // −log(s_n)/(n+1)
  double entropy_term = 0.0;  // 2n/(n+1)·S(ρ)
  double l_n = 0.0;           // u_n + entropy_term
};

struct BoundLadder {
  std::vector<LadderEntry> entries;  // n = 1, 2, … (finite orders only)
  double asymptotic_value = 0.0;     // 2S(ρ), the supremum of the entropy terms
  int best_n = 1;                    // kAsymptoticOrder when the n → ∞ entry wins
  double best_value = 0.0;
  bool symmetric_path_used = false;
  bool stopped_early = false;

  bool best_is_asymptotic() const noexcept { return best_n == kAsymptoticOrder; }
};

struct LadderOptions {
  int n_max = 64;
  double early_stop_tol = 1e-9;
};

/// Incremental s_n evaluation by running products of Ū and Ūᵀ.
///
/// The two chains are ŪŪᵀŪ… and ŪᵀŪŪᵀ… (n factors each); s_n is the product of their
/// largest entries. A symmetric Ū collapses both chains into Ūⁿ.
class SSequence {
 public:
  explicit SSequence(const BistochasticMatrix& ubar);

  /// Advances to the next order and returns s_n.
  double next();
  int order() const noexcept { return n_; }
  bool symmetric() const noexcept { return symmetric_; }

 private:
  RealMatrix ubar_;
  RealMatrix ubar_t_;
  RealMatrix chain_a_;  // starts with Ū
  RealMatrix chain_b_;  // starts with Ūᵀ
  RealMatrix scratch_;
  bool symmetric_ = false;
  int n_ = 0;
};

/// s_1 … s_{n_max} by direct products (canonical path).
std::vector<double> s_sequence(const BistochasticMatrix& ubar, int n_max);

/// s_1 … s_{n_max} for symmetric Ū from Ū = O diag(ū) Oᵀ, maximizing Σ_k ū_kⁿ O_ik O_jk
/// over every (i, j) at every n. Throws for non-symmetric input.
std::vector<double> s_sequence_spectral(const BistochasticMatrix& ubar, int n_max);

/// s_1 … s_{n_max} for arbitrary Ū from the eigendecompositions of the symmetric Gram
/// products ŪŪᵀ and ŪᵀŪ: even n = 2m uses (ŪŪᵀ)^m and (ŪᵀŪ)^m directly, odd n = 2m+1
/// multiplies those powers by Ū and Ūᵀ.
std::vector<double> s_sequence_gram_spectral(const BistochasticMatrix& ubar, int n_max);

/// L_n = −log(s_n)/(n+1) + 2n/(n+1)·S for n = 1..n_max, plus the n → ∞ candidate 2S.
BoundLadder ladder(const BistochasticMatrix& ubar, double entropy, const LadderOptions& options = {});

/// −log max_ij Ū_ij.
double maassen_uffink(const BistochasticMatrix& ubar);

/// Twice the binary entropy of (1 ± √s_MU)/2.
double de_vicente(const BistochasticMatrix& ubar);

/// w_1 … w_{k_star}: largest singular value over all submatrices of U with
/// rows + columns = k + 1. Orders above two enumerate exhaustively and require M ≤ 8.
std::vector<double> submatrix_singular_maxima(const ComplexMatrix& u, int k_star);

/// W_{k*} = (w_1, w_2−w_1, …, w_{k*}−w_{k*−1}, 1−w_{k*}, 0, …), length M, clamped to [0, 1].
RealVector majorization_vector(const ComplexMatrix& u, int k_star);

/// Shannon entropy of W_{k*}. Requires 1 ≤ k_star ≤ M−1.
double majorization_bound(const ComplexMatrix& u, int k_star);

struct GeneratorDescriptor {
  std::string family;
  Index dim = 0;
  double param = 0.0;
  std::uint64_t seed = 0;
};

struct ReportConfig {
  LadderOptions ladder;
  int k_star = 2;
};

/// Bounds rewritten for the sum of relative entropies of coherence: max(0, bound − 2S).
struct CoherenceBounds {
  double ladder = 0.0;
  double l_1 = 0.0;
  double l_dev = 0.0;
  double l_maj = 0.0;
};

struct BoundReport {
  GeneratorDescriptor generator;
  double entropy = 0.0;
  BoundLadder ladder;
  double l_mu = 0.0;
  double l_1 = 0.0;
  double l_dev = 0.0;
  double l_maj = 0.0;
  int k_star = 2;  // effective order, min(requested, M−1)
  CoherenceBounds coherence;
};

/// Every bound at one parameter point.
BoundReport full_report(const ComplexMatrix& u, double entropy, const ReportConfig& config = {},
                        GeneratorDescriptor generator = {});

}  // namespace eur
