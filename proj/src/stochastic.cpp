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

#include "eur/stochastic.hpp"

#include <cmath>

namespace eur {

namespace {

constexpr double kProbabilitySumTol = 1e-12;
constexpr double kStochasticSumTol = 1e-10;

void require_same_size(Index a, Index b, const char* who) {
  if (a != b)
    throw std::invalid_argument(std::string(who) + ": dimension mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
}

}  // namespace

ProbabilityVector::ProbabilityVector(RealVector values) : values_(std::move(values)) {
  if (values_.size() == 0) throw std::invalid_argument("ProbabilityVector: empty");
  if (!values_.allFinite()) throw std::invalid_argument("ProbabilityVector: non-finite entry");
  if (values_.minCoeff() < 0.0)
    throw std::invalid_argument("ProbabilityVector: negative entry " +
                                std::to_string(values_.minCoeff()));
  const double sum = values_.sum();
  if (std::abs(sum - 1.0) > kProbabilitySumTol)
    throw std::invalid_argument("ProbabilityVector: entries sum to " + std::to_string(sum));
}

ProbabilityVector ProbabilityVector::uniform(Index m) {
  return ProbabilityVector(RealVector::Constant(m, 1.0 / static_cast<double>(m)));
}

ProbabilityVector ProbabilityVector::point_mass(Index m, Index at) {
  RealVector v = RealVector::Zero(m);
  v(at) = 1.0;
  return ProbabilityVector(std::move(v));
}

BistochasticMatrix::BistochasticMatrix(RealMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0)
    throw std::invalid_argument("BistochasticMatrix: must be square and non-empty");
  if (!entries_.allFinite()) throw std::invalid_argument("BistochasticMatrix: non-finite entry");
  if (entries_.minCoeff() < 0.0 || entries_.maxCoeff() > 1.0 + kStochasticSumTol)
    throw std::invalid_argument("BistochasticMatrix: entries outside [0, 1]");
  const double row_defect = (entries_.rowwise().sum().array() - 1.0).abs().maxCoeff();
  const double col_defect = (entries_.colwise().sum().array() - 1.0).abs().maxCoeff();
  if (row_defect > kStochasticSumTol || col_defect > kStochasticSumTol)
    throw std::invalid_argument("BistochasticMatrix: row/column sums deviate from 1 by " +
                                std::to_string(std::max(row_defect, col_defect)));
}

bool BistochasticMatrix::is_symmetric(double tol) const {
  return max_abs(entries_ - entries_.transpose()) <= tol;
}

BistochasticMatrix BistochasticMatrix::transpose() const {
  return BistochasticMatrix(entries_.transpose());
}

BistochasticMatrix BistochasticMatrix::operator*(const BistochasticMatrix& rhs) const {
  return BistochasticMatrix(multiply(entries_, rhs.entries_));
}

BistochasticMatrix unistochastic(const ComplexMatrix& u) {
  if (u.rows() != u.cols() || u.rows() == 0)
    throw std::invalid_argument("unistochastic: matrix must be square and non-empty");
  const double defect = unitarity_defect(u);
  if (!(defect <= kUnitaryTol))
    throw std::invalid_argument("unistochastic: matrix is not unitary (defect " +
                                std::to_string(defect) + ")");
  return BistochasticMatrix(u.cwiseAbs2());
}

BistochasticMatrix van_der_waerden(Index m) {
  return BistochasticMatrix(RealMatrix::Constant(m, m, 1.0 / static_cast<double>(m)));
}

ProbabilityVector chain_propagate(const BistochasticMatrix& ubar, const ProbabilityVector& p0,
                                  Basis start, int steps) {
  require_same_size(ubar.dim(), p0.size(), "chain_propagate");
  if (steps < 0) throw std::invalid_argument("chain_propagate: negative step count");
  RealVector p = p0.values();
  Basis current = start;
  for (int step = 0; step < steps; ++step) {
    if (current == Basis::A)
      p = ubar.matrix().transpose() * p;
    else
      p = ubar.matrix() * p;
    current = other(current);
  }
  return ProbabilityVector(std::move(p));
}

double shannon_entropy(const RealVector& p) {
  double h = 0.0;
  for (Index i = 0; i < p.size(); ++i)
    if (p(i) > 0.0) h -= p(i) * std::log(p(i));
  return h;
}

double shannon_entropy(const ProbabilityVector& p) { return shannon_entropy(p.values()); }

double kl_divergence(const ProbabilityVector& p, const ProbabilityVector& q) {
  require_same_size(p.size(), q.size(), "kl_divergence");
  double d = 0.0;
  for (Index i = 0; i < p.size(); ++i) {
    if (p(i) == 0.0) continue;
    if (q(i) == 0.0) return kInfiniteDivergence;
    d += p(i) * std::log(p(i) / q(i));
  }
  return std::max(d, 0.0);
}

double cross_entropy(const ProbabilityVector& p, const ProbabilityVector& q) {
  require_same_size(p.size(), q.size(), "cross_entropy");
  double c = 0.0;
  for (Index i = 0; i < p.size(); ++i) {
    if (p(i) == 0.0) continue;
    if (q(i) == 0.0) return kInfiniteDivergence;
    c -= p(i) * std::log(q(i));
  }
  return c;
}

double von_neumann_entropy(const Spectrum& s) { return shannon_entropy(s.values); }

ComplexMatrix MixedState::density() const {
  return eigenvectors * spectrum.values.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

MixedState make_state(const ComplexMatrix& u, const Spectrum& spectrum, Frame frame,
                      std::uint64_t seed) {
  require_same_size(u.rows(), spectrum.values.size(), "make_state");
  switch (frame) {
    case Frame::ADiagonal:
      return MixedState{spectrum, ComplexMatrix::Identity(u.rows(), u.cols())};
    case Frame::BDiagonal:
      return MixedState{spectrum, u};
    case Frame::Random:
      return MixedState{spectrum, haar_random(u.rows(), seed)};
  }
  throw std::invalid_argument("make_state: unknown frame");
}

ProbabilityVector measurement_probabilities(const ComplexMatrix& u, const MixedState& state,
                                            Basis basis) {
  require_same_size(u.rows(), state.eigenvectors.rows(), "measurement_probabilities");
  require_same_size(state.eigenvectors.cols(), state.spectrum.values.size(),
                    "measurement_probabilities");
  // Overlaps ⟨x_i|v_k⟩: identity for A, U† for B.
  const RealMatrix overlaps = basis == Basis::A
                                  ? RealMatrix(state.eigenvectors.cwiseAbs2())
                                  : RealMatrix((u.adjoint() * state.eigenvectors).cwiseAbs2());
  RealVector p = overlaps * state.spectrum.values;
  return ProbabilityVector(std::move(p));
}

}  // namespace eur
