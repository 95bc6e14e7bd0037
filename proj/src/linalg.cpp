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

#include "eur/linalg.hpp"

#include <numbers>

namespace eur {

namespace {

// Consecutive eigenvalues of (U+U†)/2 closer than this are treated as one invariant subspace.
constexpr double kClusterGap = 1e-5;

}  // namespace

RealSymmetricEigenDecomposition eigh_real_symmetric(const RealMatrix& a, double tol) {
  return jacobi_eigh(a, tol);
}

HermitianEigenDecomposition eigh_hermitian(const ComplexMatrix& a, double tol) {
  return jacobi_eigh(a, tol);
}

UnitaryEigen eig_unitary(const ComplexMatrix& u) {
  if (u.rows() != u.cols() || u.rows() == 0)
    throw std::invalid_argument("eig_unitary: matrix must be square and non-empty");
  if (!u.allFinite()) throw std::invalid_argument("eig_unitary: non-finite entries");
  const double defect = unitarity_defect(u);
  if (defect > kUnitaryTol)
    throw std::invalid_argument("eig_unitary: matrix is not unitary (defect " +
                                std::to_string(defect) + ")");

  const Index m = u.rows();
  const ComplexMatrix re_part = (u + u.adjoint()) / 2.0;
  const ComplexMatrix im_part = (u - u.adjoint()) / Complex(0.0, 2.0);

  // Stage 1: eigenvectors of the Hermitian real part.
  const HermitianEigenDecomposition first = jacobi_eigh(re_part);
  ComplexMatrix vectors = first.eigenvectors;

  // Stage 2: inside each cluster of equal cos φ, split by the imaginary part.
  Index begin = 0;
  while (begin < m) {
    Index end = begin + 1;
    while (end < m && first.eigenvalues(end - 1) - first.eigenvalues(end) <= kClusterGap) ++end;
    const Index width = end - begin;
    if (width > 1) {
      const ComplexMatrix basis = vectors.middleCols(begin, width);
      const ComplexMatrix compressed = basis.adjoint() * im_part * basis;
      const HermitianEigenDecomposition second =
          jacobi_eigh((compressed + compressed.adjoint()) / 2.0);
      vectors.middleCols(begin, width) = basis * second.eigenvectors;
    }
    begin = end;
  }

  UnitaryEigen out;
  out.eigenvectors = std::move(vectors);
  out.phases.resize(m);
  for (Index k = 0; k < m; ++k) {
    const auto vk = out.eigenvectors.col(k);
    const Complex lambda = vk.dot(u * vk);  // v† U v
    double phi = std::arg(lambda);
    // −1 must land on +π, whatever the sign of the round-off in Im λ.
    if (phi <= -std::numbers::pi + 1e-9) phi += 2.0 * std::numbers::pi;
    out.phases(k) = phi;
  }
  return out;
}

ComplexMatrix unitary_power(const ComplexMatrix& u, double beta) {
  return unitary_function(u, [beta](double phi) { return std::polar(1.0, beta * phi); });
}

double largest_singular_value(const ComplexMatrix& block) {
  if (block.size() == 0) throw std::invalid_argument("largest_singular_value: empty block");
  const bool wide = block.rows() <= block.cols();
  const ComplexMatrix gram = wide ? ComplexMatrix(block * block.adjoint())
                                  : ComplexMatrix(block.adjoint() * block);
  if (gram.rows() == 1) return std::sqrt(std::max(gram(0, 0).real(), 0.0));
  if (gram.rows() == 2) {
    const double a = gram(0, 0).real();
    const double d = gram(1, 1).real();
    const double half_gap = (a - d) / 2.0;
    const double top = (a + d) / 2.0 + std::sqrt(half_gap * half_gap + std::norm(gram(0, 1)));
    return std::sqrt(std::max(top, 0.0));
  }
  const HermitianEigenDecomposition eig = jacobi_eigh(gram);
  return std::sqrt(std::max(eig.eigenvalues(0), 0.0));
}

}  // namespace eur
