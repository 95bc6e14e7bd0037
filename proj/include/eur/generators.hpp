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

#include "eur/linalg.hpp"

namespace eur {

/// Eigenvalue profile of a mixed state, sorted non-increasing and summing to one.
struct Spectrum {
  RealVector values;
  double beta = 0.0;  // thermal parameter when generated by thermal_spectrum
};

/// [[cos θ, −sin θ], [sin θ, cos θ]].
ComplexMatrix qubit_rotation(double theta);

/// Quantum Fourier transform (F_M)_{kh} = exp(2iπkh/M)/√M with k, h ∈ {0, …, M−1}.
ComplexMatrix qft(Index m);

/// F_M^β on the principal eigenphase branch.
ComplexMatrix qft_power(Index m, double beta);

/// y-component of the angular momentum operator for spin j = (M−1)/2 in the |j, m⟩ basis
/// ordered m = j, j−1, …, −j.
ComplexMatrix spin_y(Index m);

/// exp(−2iθ J_y), built by spectral calculus on J_y.
ComplexMatrix spin_rotation(Index m, double theta);

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases of diag(R)
/// moved into Q. Deterministic for a given seed.
ComplexMatrix haar_random(Index m, std::uint64_t seed);

/// λ_k ∝ exp(βk), k = 1..M, evaluated with log-sum-exp and sorted non-increasing.
Spectrum thermal_spectrum(Index m, double beta);

/// Thermal spectrum (β ≤ 0) whose von Neumann entropy is target_entropy ± 1e-6 nats.
Spectrum spectrum_for_entropy(Index m, double target_entropy);

}  // namespace eur
