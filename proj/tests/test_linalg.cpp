#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <numbers>
#include <random>

#include "eur/generators.hpp"
#include "eur/linalg.hpp"

using namespace eur;

namespace {

RealMatrix random_symmetric(Index m, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  RealMatrix a(m, m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) a(i, j) = g(rng);
  return (a + a.transpose()) / 2.0;
}

ComplexMatrix random_hermitian(Index m, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  ComplexMatrix a(m, m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) a(i, j) = Complex(g(rng), g(rng));
  return (a + a.adjoint()) / 2.0;
}

// Power iteration on B†B.
double power_sigma(const ComplexMatrix& b) {
  ComplexVector x = ComplexVector::Ones(b.cols());
  double sigma = 0.0;
  for (int it = 0; it < 5000; ++it) {
    ComplexVector y = b.adjoint() * (b * x);
    const double nrm = y.norm();
    if (nrm == 0.0) return 0.0;
    x = y / nrm;
    sigma = std::sqrt(nrm);
  }
  return sigma;
}

}  // namespace

TEST_CASE("real Jacobi agrees with Eigen's self-adjoint solver") {
  for (Index m : {1, 2, 3, 7, 16, 40}) {
    const RealMatrix a = random_symmetric(m, 11u + static_cast<unsigned>(m));
    const auto ours = eigh_real_symmetric(a);
    Eigen::SelfAdjointEigenSolver<RealMatrix> ref(a);
    RealVector expected = ref.eigenvalues().reverse();
    CHECK(max_abs(ours.eigenvalues - expected) < 1e-10 * std::max(1.0, a.norm()));
    CHECK(max_abs(a * ours.eigenvectors - ours.eigenvectors * ours.eigenvalues.asDiagonal()) < 1e-10);
    CHECK(unitarity_defect(ours.eigenvectors) < 1e-12);
  }
}

TEST_CASE("complex Jacobi diagonalizes Hermitian matrices") {
  for (Index m : {2, 5, 12, 30}) {
    const ComplexMatrix a = random_hermitian(m, 7u * static_cast<unsigned>(m));
    const auto ours = eigh_hermitian(a);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> ref(a);
    CHECK(max_abs(ours.eigenvalues - RealVector(ref.eigenvalues().reverse())) < 1e-10);
    const ComplexMatrix recon =
        ours.eigenvectors * ours.eigenvalues.cast<Complex>().asDiagonal() * ours.eigenvectors.adjoint();
    CHECK(max_abs(recon - a) < 1e-10);
    CHECK(unitarity_defect(ours.eigenvectors) < 1e-12);
  }
}

TEST_CASE("degenerate spectra") {
  const RealMatrix id = RealMatrix::Identity(6, 6);
  const auto e = eigh_real_symmetric(id);
  CHECK(max_abs(e.eigenvalues - RealVector::Ones(6)) == 0.0);

  RealMatrix j = RealMatrix::Constant(4, 4, 1.0);
  const auto ej = eigh_real_symmetric(j);
  CHECK(ej.eigenvalues(0) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(std::abs(ej.eigenvalues(3)) < 1e-12);
}

TEST_CASE("Jacobi reports non-convergence") {
  const RealMatrix a = random_symmetric(20, 3);
  CHECK_THROWS_AS(jacobi_eigh(a, 1e-13, 1), ConvergenceError);
}

TEST_CASE("unitary eigendecomposition matches complex Schur eigenvalues") {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
    const ComplexMatrix u = haar_random(6, seed);
    const auto eig = eig_unitary(u);
    const ComplexMatrix recon =
        eig.eigenvectors * eig.phases.unaryExpr([](double p) { return std::polar(1.0, p); }).asDiagonal() *
        eig.eigenvectors.adjoint();
    CHECK(max_abs(recon - u) < 1e-10);

    Eigen::ComplexSchur<ComplexMatrix> schur(u);
    std::vector<double> ref, ours;
    for (Index k = 0; k < 6; ++k) {
      ref.push_back(std::arg(schur.matrixT()(k, k)));
      ours.push_back(eig.phases(k));
    }
    std::sort(ref.begin(), ref.end());
    std::sort(ours.begin(), ours.end());
    for (std::size_t k = 0; k < ref.size(); ++k) CHECK(ours[k] == doctest::Approx(ref[k]).epsilon(1e-9));
  }
}

TEST_CASE("unitary eigendecomposition survives degenerate eigenphases") {
  for (Index m : {3, 4, 8, 16, 64}) {
    const ComplexMatrix f = qft(m);
    const auto eig = eig_unitary(f);
    const ComplexMatrix recon =
        eig.eigenvectors * eig.phases.unaryExpr([](double p) { return std::polar(1.0, p); }).asDiagonal() *
        eig.eigenvectors.adjoint();
    CHECK(max_abs(recon - f) < 1e-10);
    CHECK(unitarity_defect(eig.eigenvectors) < 1e-10);
  }
  const auto neg = eig_unitary(-ComplexMatrix::Identity(3, 3));
  CHECK(max_abs(neg.phases - RealVector::Constant(3, std::numbers::pi)) == 0.0);
}

TEST_CASE("unitary powers") {
  const ComplexMatrix f3 = qft(3);
  const ComplexMatrix half = unitary_power(f3, 0.5);
  CHECK(max_abs(half * half - f3) < 1e-12);
  CHECK(max_abs(unitary_power(f3, 0.0) - ComplexMatrix::Identity(3, 3)) < 1e-12);
  CHECK(max_abs(unitary_power(f3, 1.0) - f3) < 1e-12);
  CHECK(unitarity_defect(unitary_power(haar_random(5, 9), 0.37)) < 1e-12);
}

TEST_CASE("largest singular value against power iteration") {
  const ComplexMatrix u = haar_random(7, 42);
  CHECK(largest_singular_value(u.block(0, 0, 1, 3)) == doctest::Approx(u.block(0, 0, 1, 3).norm()));
  CHECK(largest_singular_value(u.block(1, 2, 2, 4)) == doctest::Approx(power_sigma(u.block(1, 2, 2, 4))).epsilon(1e-9));
  CHECK(largest_singular_value(u.block(0, 1, 4, 3)) == doctest::Approx(power_sigma(u.block(0, 1, 4, 3))).epsilon(1e-9));
  CHECK(largest_singular_value(u) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS(largest_singular_value(ComplexMatrix(0, 3)));
}

TEST_CASE("multiply rejects mismatched shapes") {
  CHECK_THROWS_AS(multiply(RealMatrix::Zero(2, 3), RealMatrix::Zero(2, 3)), std::invalid_argument);
}
