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

#include "eur/generators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "eur/stochastic.hpp"

namespace eur {

namespace {

constexpr double kEntropyTol = 1e-6;
constexpr int kBisectionBudget = 200;

void require_dim(Index m, Index min, const char* who) {
  if (m < min)
    throw std::invalid_argument(std::string(who) + ": dimension must be at least " +
                                std::to_string(min));
}

}  // namespace

ComplexMatrix qubit_rotation(double theta) {
  ComplexMatrix u(2, 2);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  u << c, -s, s, c;
  return u;
}

ComplexMatrix qft(Index m) {
  require_dim(m, 2, "qft");
  ComplexMatrix f(m, m);
  const double norm = 1.0 / std::sqrt(static_cast<double>(m));
  for (Index k = 0; k < m; ++k) {
    for (Index h = 0; h < m; ++h) {
      // Reduce kh mod M first so the phase stays accurate for large M.
      const auto r = static_cast<double>((k * h) % m);
      f(k, h) = std::polar(norm, 2.0 * std::numbers::pi * r / static_cast<double>(m));
    }
  }
  return f;
}

ComplexMatrix qft_power(Index m, double beta) { return unitary_power(qft(m), beta); }

ComplexMatrix spin_y(Index m) {
  require_dim(m, 2, "spin_y");
  const double j = (static_cast<double>(m) - 1.0) / 2.0;
  ComplexMatrix jy = ComplexMatrix::Zero(m, m);
  // ⟨m+1|J+|m⟩ = sqrt(j(j+1) − m(m+1)); row a holds magnetic number j − a.
  for (Index a = 1; a < m; ++a) {
    const double mz = j - static_cast<double>(a);
    const double coeff = std::sqrt(j * (j + 1.0) - mz * (mz + 1.0));
    // J_y = (J+ − J−)/(2i): (J_y)_{a−1,a} = coeff/(2i), (J_y)_{a,a−1} = −coeff/(2i)
    jy(a - 1, a) = Complex(0.0, -coeff / 2.0);
    jy(a, a - 1) = Complex(0.0, coeff / 2.0);
  }
  return jy;
}

ComplexMatrix spin_rotation(Index m, double theta) {
  require_dim(m, 2, "spin_rotation");
  const HermitianEigenDecomposition eig = eigh_hermitian(spin_y(m));
  ComplexVector phases(m);
  for (Index k = 0; k < m; ++k) phases(k) = std::polar(1.0, -2.0 * theta * eig.eigenvalues(k));
  return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

ComplexMatrix haar_random(Index m, std::uint64_t seed) {
  require_dim(m, 1, "haar_random");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix z(m, m);
  for (Index j = 0; j < m; ++j)
    for (Index i = 0; i < m; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      z(i, j) = Complex(re, im);
    }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(m, m);
  const ComplexMatrix& r = qr.matrixQR();
  for (Index k = 0; k < m; ++k) {
    const Complex d = r(k, k);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(k) *= d / mag;
  }
  return q;
}

Spectrum thermal_spectrum(Index m, double beta) {
  require_dim(m, 1, "thermal_spectrum");
  RealVector logits(m);
  for (Index k = 0; k < m; ++k) logits(k) = beta * static_cast<double>(k + 1);
  const double top = logits.maxCoeff();
  RealVector weights = (logits.array() - top).exp().matrix();
  weights /= weights.sum();
  std::sort(weights.data(), weights.data() + m, std::greater<>());
  return Spectrum{std::move(weights), beta};
}

Spectrum spectrum_for_entropy(Index m, double target_entropy) {
  require_dim(m, 1, "spectrum_for_entropy");
  const double log_m = std::log(static_cast<double>(m));
  if (!(target_entropy >= 0.0) || target_entropy > log_m + 1e-12)
    throw std::invalid_argument("spectrum_for_entropy: target " + std::to_string(target_entropy) +
                                " outside [0, log M]");

  if (target_entropy >= log_m - kEntropyTol) return thermal_spectrum(m, 0.0);
  if (target_entropy <= 0.0) {
    RealVector pure = RealVector::Zero(m);
    pure(0) = 1.0;
    return Spectrum{std::move(pure), -std::numeric_limits<double>::infinity()};
  }

  auto entropy_at = [m](double beta) { return shannon_entropy(thermal_spectrum(m, beta).values); };

  // Entropy decreases monotonically as β → −∞; bracket the target, then bisect.
  double hi = 0.0;  // entropy(hi) > target
  double lo = -1.0;
  while (entropy_at(lo) > target_entropy) {
    hi = lo;
    lo *= 2.0;
    if (lo < -1e6) break;
  }
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < kBisectionBudget; ++it) {
    mid = 0.5 * (lo + hi);
    const double h = entropy_at(mid);
    if (std::abs(h - target_entropy) <= kEntropyTol * 1e-3) break;
    if (h > target_entropy)
      hi = mid;
    else
      lo = mid;
  }
  Spectrum out = thermal_spectrum(m, mid);
  if (std::abs(shannon_entropy(out.values) - target_entropy) > kEntropyTol)
    throw ConvergenceError("spectrum_for_entropy: bisection did not reach the target",
                           std::abs(shannon_entropy(out.values) - target_entropy));
  return out;
}

}  // namespace eur
