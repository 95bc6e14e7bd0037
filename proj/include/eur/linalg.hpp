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

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Dense>

namespace eur {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Raised when an iterative solver exhausts its sweep budget.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// Entrywise max-norm tolerances used across the library.
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kSymmetryTol = 1e-10;

/// Entrywise max-norm ‖a‖_max.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

/// ‖U†U − I‖_max.
template <typename Derived>
double unitarity_defect(const Eigen::MatrixBase<Derived>& u) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Matrix gram = u.adjoint() * u;
  return max_abs(gram - Matrix::Identity(u.cols(), u.cols()));
}

/// ‖A − A†‖_max.
template <typename Derived>
double hermiticity_defect(const Eigen::MatrixBase<Derived>& a) {
  return max_abs(a - a.adjoint());
}

/// Checked matrix product; throws on inner-dimension mismatch.
template <typename DerivedA, typename DerivedB>
auto multiply(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  static_assert(std::is_same_v<Scalar, typename DerivedB::Scalar>,
                "multiply: operands must share a scalar type");
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("multiply: dimension mismatch (" + std::to_string(a.rows()) +
                                "x" + std::to_string(a.cols()) + " times " +
                                std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + ")");
  }
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out;
  out.noalias() = a * b;
  return out;
}

/// Eigenpairs of a self-adjoint matrix; eigenvalues non-increasing, eigenvectors in columns.
template <typename Scalar>
struct SelfAdjointEigen {
  RealVector eigenvalues;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> eigenvectors;
  int sweeps = 0;
};

using RealSymmetricEigenDecomposition = SelfAdjointEigen<double>;
using HermitianEigenDecomposition = SelfAdjointEigen<Complex>;

namespace detail {

inline double abs2(double x) { return x * x; }
inline double abs2(const Complex& z) { return std::norm(z); }
inline double real_part(double x) { return x; }
inline double real_part(const Complex& z) { return z.real(); }
inline double unit_phase(double x) { return x < 0.0 ? -1.0 : 1.0; }
inline Complex unit_phase(const Complex& z) { return z / std::abs(z); }
inline double conj_of(double x) { return x; }
inline Complex conj_of(const Complex& z) { return std::conj(z); }

template <typename Matrix>
double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (i != j) sum += abs2(a(i, j));
  return std::sqrt(sum);
}

}  // namespace detail

/// Cyclic Jacobi diagonalization of a real symmetric or complex Hermitian matrix.
///
/// Each (p, q) rotation first removes the phase of a_pq with a diagonal unitary and then
/// applies the classical real Jacobi rotation, so the same kernel serves both scalar types.
/// Iterates until the off-diagonal Frobenius norm drops below tol·‖A‖_F.
template <typename Derived>
SelfAdjointEigen<typename Derived::Scalar> jacobi_eigh(const Eigen::MatrixBase<Derived>& input,
                                                       double tol = 1e-13, int max_sweeps = 100) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  if (input.rows() != input.cols() || input.rows() == 0)
    throw std::invalid_argument("jacobi_eigh: matrix must be square and non-empty");
  if (!input.allFinite()) throw std::invalid_argument("jacobi_eigh: non-finite entries");
  const double defect = hermiticity_defect(input);
  if (defect > kSymmetryTol)
    throw std::invalid_argument("jacobi_eigh: matrix is not self-adjoint (defect " +
                                std::to_string(defect) + ")");

  const Index m = input.rows();
  Matrix a = (input + input.adjoint()) / 2.0;
  Matrix v = Matrix::Identity(m, m);
  const double threshold = tol * std::max(a.norm(), 1e-300);

  int sweep = 0;
  double residual = detail::off_diagonal_norm(a);
  while (residual > threshold) {
    if (sweep == max_sweeps)
      throw ConvergenceError("jacobi_eigh: no convergence after " + std::to_string(max_sweeps) +
                                 " sweeps",
                             residual);
    for (Index p = 0; p < m - 1; ++p) {
      for (Index q = p + 1; q < m; ++q) {
        const Scalar apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const Scalar phase = detail::unit_phase(apq);
        const Scalar phase_bar = detail::conj_of(phase);
        const double tau = (detail::real_part(a(q, q)) - detail::real_part(a(p, p))) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // G = diag(1, conj(phase)) * [[c, s], [-s, c]]
        const Scalar g10 = -s * phase_bar;
        const Scalar g11 = c * phase_bar;

        // A <- A G
        for (Index i = 0; i < m; ++i) {
          const Scalar aip = a(i, p);
          const Scalar aiq = a(i, q);
          a(i, p) = c * aip + g10 * aiq;
          a(i, q) = s * aip + g11 * aiq;
        }
        // A <- G^† A
        const Scalar g10c = detail::conj_of(g10);
        const Scalar g11c = detail::conj_of(g11);
        for (Index j = 0; j < m; ++j) {
          const Scalar apj = a(p, j);
          const Scalar aqj = a(q, j);
          a(p, j) = c * apj + g10c * aqj;
          a(q, j) = s * apj + g11c * aqj;
        }
        a(p, q) = Scalar(0);
        a(q, p) = Scalar(0);
        a(p, p) = Scalar(detail::real_part(a(p, p)));
        a(q, q) = Scalar(detail::real_part(a(q, q)));

        for (Index i = 0; i < m; ++i) {
          const Scalar vip = v(i, p);
          const Scalar viq = v(i, q);
          v(i, p) = c * vip + g10 * viq;
          v(i, q) = s * vip + g11 * viq;
        }
      }
    }
    ++sweep;
    residual = detail::off_diagonal_norm(a);
  }

  std::vector<Index> order(static_cast<std::size_t>(m));
  for (Index i = 0; i < m; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](Index x, Index y) {
    return detail::real_part(a(x, x)) > detail::real_part(a(y, y));
  });

  SelfAdjointEigen<Scalar> out;
  out.eigenvalues.resize(m);
  out.eigenvectors.resize(m, m);
  out.sweeps = sweep;
  for (Index k = 0; k < m; ++k) {
    const Index src = order[static_cast<std::size_t>(k)];
    out.eigenvalues(k) = detail::real_part(a(src, src));
    out.eigenvectors.col(k) = v.col(src);
  }
  return out;
}

/// Real symmetric eigendecomposition (cyclic Jacobi).
RealSymmetricEigenDecomposition eigh_real_symmetric(const RealMatrix& a, double tol = 1e-13);

/// Hermitian eigendecomposition (complex cyclic Jacobi).
HermitianEigenDecomposition eigh_hermitian(const ComplexMatrix& a, double tol = 1e-13);

/// Spectral decomposition U = V diag(e^{iφ}) V† of a unitary matrix.
struct UnitaryEigen {
  RealVector phases;  // principal branch, φ ∈ (−π, π]
  ComplexMatrix eigenvectors;
};

/// Diagonalizes a unitary via its commuting Hermitian parts (U+U†)/2 and (U−U†)/2i.
UnitaryEigen eig_unitary(const ComplexMatrix& u);

/// V · diag(phase_map(φ_k)) · V† over the eigenphases of a unitary.
template <typename PhaseMap>
ComplexMatrix unitary_function(const ComplexMatrix& u, PhaseMap&& phase_map) {
  const UnitaryEigen eig = eig_unitary(u);
  ComplexVector mapped(eig.phases.size());
  for (Index k = 0; k < eig.phases.size(); ++k) mapped(k) = phase_map(eig.phases(k));
  return eig.eigenvectors * mapped.asDiagonal() * eig.eigenvectors.adjoint();
}

/// U^β on the principal branch.
ComplexMatrix unitary_power(const ComplexMatrix& u, double beta);

/// Largest singular value of a (possibly rectangular) block. Blocks with a side of at most
/// two use the closed-form Gram eigenvalue; larger blocks go through eigh_hermitian.
double largest_singular_value(const ComplexMatrix& block);

}  // namespace eur
