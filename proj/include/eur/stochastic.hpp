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

#include "eur/generators.hpp"
#include "eur/linalg.hpp"

namespace eur {

/// Returned by kl_divergence and cross_entropy when supp(p) ⊄ supp(q).
inline constexpr double kInfiniteDivergence = std::numeric_limits<double>::infinity();

/// Nonnegative vector summing to one (within 1e-12).
class ProbabilityVector {
 public:
  explicit ProbabilityVector(RealVector values);

  static ProbabilityVector uniform(Index m);
  static ProbabilityVector point_mass(Index m, Index at);

  const RealVector& values() const noexcept { return values_; }
  Index size() const noexcept { return values_.size(); }
  double operator()(Index i) const { return values_(i); }

 private:
  RealVector values_;
};

/// Square nonnegative matrix with unit row and column sums (within 1e-10).
class BistochasticMatrix {
 public:
  explicit BistochasticMatrix(RealMatrix entries);

  const RealMatrix& matrix() const noexcept { return entries_; }
  Index dim() const noexcept { return entries_.rows(); }
  double operator()(Index i, Index j) const { return entries_(i, j); }
  double max_entry() const { return entries_.maxCoeff(); }
  bool is_symmetric(double tol = kSymmetryTol) const;

  BistochasticMatrix transpose() const;
  BistochasticMatrix operator*(const BistochasticMatrix& rhs) const;

 private:
  RealMatrix entries_;
};

/// Labels the two measurement bases; |b_j⟩ = U|a_j⟩.
enum class Basis { A, B };

constexpr Basis other(Basis b) { return b == Basis::A ? Basis::B : Basis::A; }

/// Ū_ij = |⟨a_i|U|a_j⟩|². Throws on a non-unitary argument.
BistochasticMatrix unistochastic(const ComplexMatrix& u);

/// The matrix with every entry 1/M.
BistochasticMatrix van_der_waerden(Index m);

/// Transports an outcome distribution through `steps` alternating measurement stages.
///
/// A distribution over basis A moves to basis B by Ūᵀ and a distribution over B moves back
/// to A by Ū, so two steps from A give p^{aba} = ŪŪᵀ p^a. The result lives in `start` for
/// even `steps` and in the other basis otherwise.
ProbabilityVector chain_propagate(const BistochasticMatrix& ubar, const ProbabilityVector& p0,
                                  Basis start, int steps);

/// −Σ p_i log p_i (nats), with 0 log 0 = 0.
double shannon_entropy(const RealVector& p);
double shannon_entropy(const ProbabilityVector& p);

/// D(p‖q) in nats, or kInfiniteDivergence on a support violation.
double kl_divergence(const ProbabilityVector& p, const ProbabilityVector& q);

/// C(p‖q) = −Σ p_i log q_i = H(p) + D(p‖q).
double cross_entropy(const ProbabilityVector& p, const ProbabilityVector& q);

double von_neumann_entropy(const Spectrum& s);

/// Eigenbasis of the state: aligned with A, with B, or a seeded Haar frame.
enum class Frame { ADiagonal, BDiagonal, Random };

/// ρ = Σ_k λ_k |v_k⟩⟨v_k|, eigenvectors stored as columns in A-basis coordinates.
struct MixedState {
  Spectrum spectrum;
  ComplexMatrix eigenvectors;

  ComplexMatrix density() const;
};

MixedState make_state(const ComplexMatrix& u, const Spectrum& spectrum, Frame frame,
                      std::uint64_t seed = 0);

/// p_i = Σ_k λ_k |⟨x_i|v_k⟩|² for x = a or b.
ProbabilityVector measurement_probabilities(const ComplexMatrix& u, const MixedState& state,
                                            Basis basis);

}  // namespace eur
