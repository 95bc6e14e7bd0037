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

#include "eur/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace eur {

namespace {

void require_orders(int n_max, const char* who) {
  if (n_max < 1) throw std::invalid_argument(std::string(who) + ": n_max must be at least 1");
}

double binary_term(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// Largest |U_ij|² summed over the best pair within any row or column.
double best_pair_norm_sq(const RealMatrix& mod_sq) {
  double best = 0.0;
  auto scan = [&best](const auto& line) {
    double first = 0.0;
    double second = 0.0;
    for (Index i = 0; i < line.size(); ++i) {
      const double x = line(i);
      if (x > first) {
        second = first;
        first = x;
      } else if (x > second) {
        second = x;
      }
    }
    best = std::max(best, first + second);
  };
  for (Index i = 0; i < mod_sq.rows(); ++i) scan(mod_sq.row(i));
  for (Index j = 0; j < mod_sq.cols(); ++j) scan(mod_sq.col(j));
  return best;
}

ComplexMatrix gather(const ComplexMatrix& u, unsigned rows, unsigned cols) {
  ComplexMatrix block(std::popcount(rows), std::popcount(cols));
  Index r = 0;
  for (Index i = 0; i < u.rows(); ++i) {
    if (!(rows >> i & 1u)) continue;
    Index c = 0;
    for (Index j = 0; j < u.cols(); ++j)
      if (cols >> j & 1u) block(r, c++) = u(i, j);
    ++r;
  }
  return block;
}

// Exhaustive max of σ_max over blocks with rows + cols = order + 1.
double enumerate_order(const ComplexMatrix& u, int order) {
  const auto m = static_cast<int>(u.rows());
  const unsigned full = 1u << m;
  double best = 0.0;
  for (int n_rows = 1; n_rows <= m; ++n_rows) {
    const int n_cols = order + 1 - n_rows;
    if (n_cols < 1 || n_cols > m) continue;
    for (unsigned rows = 1; rows < full; ++rows) {
      if (std::popcount(rows) != n_rows) continue;
      for (unsigned cols = 1; cols < full; ++cols) {
        if (std::popcount(cols) != n_cols) continue;
        best = std::max(best, largest_singular_value(gather(u, rows, cols)));
      }
    }
  }
  return best;
}

}  // namespace

SSequence::SSequence(const BistochasticMatrix& ubar)
    : ubar_(ubar.matrix()), ubar_t_(ubar.matrix().transpose()), symmetric_(ubar.is_symmetric()) {}

double SSequence::next() {
  ++n_;
  if (n_ == 1) {
    chain_a_ = ubar_;
    if (!symmetric_) chain_b_ = ubar_t_;
  } else if (symmetric_) {
    scratch_.noalias() = chain_a_ * ubar_;
    chain_a_.swap(scratch_);
  } else {
    // chain_a ends with Ū after an odd number of factors, chain_b with Ūᵀ.
    const bool a_ends_with_ubar = (n_ - 1) % 2 == 1;
    scratch_.noalias() = chain_a_ * (a_ends_with_ubar ? ubar_t_ : ubar_);
    chain_a_.swap(scratch_);
    scratch_.noalias() = chain_b_ * (a_ends_with_ubar ? ubar_ : ubar_t_);
    chain_b_.swap(scratch_);
  }
  const double top_a = chain_a_.maxCoeff();
  const double top_b = symmetric_ ? top_a : chain_b_.maxCoeff();
  return top_a * top_b;
}

std::vector<double> s_sequence(const BistochasticMatrix& ubar, int n_max) {
  require_orders(n_max, "s_sequence");
  SSequence seq(ubar);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) out.push_back(seq.next());
  return out;
}

std::vector<double> s_sequence_spectral(const BistochasticMatrix& ubar, int n_max) {
  require_orders(n_max, "s_sequence_spectral");
  if (!ubar.is_symmetric())
    throw std::invalid_argument("s_sequence_spectral: Ū is not symmetric");
  const RealSymmetricEigenDecomposition eig = eigh_real_symmetric(ubar.matrix());
  const RealMatrix& basis = eig.eigenvectors;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n_max));
  RealVector powers = RealVector::Ones(eig.eigenvalues.size());
  for (int n = 1; n <= n_max; ++n) {
    powers = powers.cwiseProduct(eig.eigenvalues);
    // Negative eigenvalues can move the argmax between even and odd n, so take the
    // maximum over all entries every time.
    const RealMatrix power_n = basis * powers.asDiagonal() * basis.transpose();
    const double top = power_n.maxCoeff();
    out.push_back(top * top);
  }
  return out;
}

std::vector<double> s_sequence_gram_spectral(const BistochasticMatrix& ubar, int n_max) {
  require_orders(n_max, "s_sequence_gram_spectral");
  const RealMatrix& u = ubar.matrix();
  const RealMatrix ut = u.transpose();
  const RealSymmetricEigenDecomposition gram_a = eigh_real_symmetric(u * ut);
  const RealSymmetricEigenDecomposition gram_b = eigh_real_symmetric(ut * u);

  auto power = [](const RealSymmetricEigenDecomposition& eig, int m) {
    const RealVector scaled = eig.eigenvalues.array().pow(static_cast<double>(m)).matrix();
    return RealMatrix(eig.eigenvectors * scaled.asDiagonal() * eig.eigenvectors.transpose());
  };

  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    const int m = n / 2;
    RealMatrix chain_a = power(gram_a, m);
    RealMatrix chain_b = power(gram_b, m);
    if (n % 2 == 1) {
      chain_a = chain_a * u;
      chain_b = chain_b * ut;
    }
    out.push_back(chain_a.maxCoeff() * chain_b.maxCoeff());
  }
  return out;
}

BoundLadder ladder(const BistochasticMatrix& ubar, double entropy, const LadderOptions& options) {
  require_orders(options.n_max, "ladder");
  if (!(entropy >= 0.0) || !std::isfinite(entropy))
    throw std::invalid_argument("ladder: entropy must be finite and nonnegative");

  BoundLadder out;
  SSequence seq(ubar);
  out.symmetric_path_used = seq.symmetric();
  out.entries.reserve(static_cast<std::size_t>(options.n_max));
  for (int n = 1; n <= options.n_max; ++n) {
    LadderEntry e;
    e.n = n;
    e.s_n = seq.next();
    e.u_n = -std::log(e.s_n) / (n + 1);
    e.entropy_term = 2.0 * n / (n + 1) * entropy;
    e.l_n = e.u_n + e.entropy_term;
    out.entries.push_back(e);
    if (e.u_n < options.early_stop_tol && 2.0 * entropy / (n + 2) < options.early_stop_tol &&
        n < options.n_max) {
      out.stopped_early = true;
      break;
    }
  }

  out.asymptotic_value = 2.0 * entropy;
  out.best_n = out.entries.front().n;
  out.best_value = out.entries.front().l_n;
  for (const LadderEntry& e : out.entries) {
    if (e.l_n > out.best_value) {
      out.best_value = e.l_n;
      out.best_n = e.n;
    }
  }
  if (out.asymptotic_value > out.best_value) {
    out.best_value = out.asymptotic_value;
    out.best_n = kAsymptoticOrder;
  }
  return out;
}

double maassen_uffink(const BistochasticMatrix& ubar) { return -std::log(ubar.max_entry()); }

double de_vicente(const BistochasticMatrix& ubar) {
  const double root = std::sqrt(std::min(ubar.max_entry(), 1.0));
  return -2.0 * (binary_term((1.0 - root) / 2.0) + binary_term((1.0 + root) / 2.0));
}

std::vector<double> submatrix_singular_maxima(const ComplexMatrix& u, int k_star) {
  if (k_star < 1) throw std::invalid_argument("submatrix_singular_maxima: k_star must be >= 1");
  if (k_star > 2 && u.rows() > 8)
    throw std::invalid_argument(
        "submatrix_singular_maxima: orders above 2 are enumerated exhaustively and need M <= 8");
  const RealMatrix mod_sq = u.cwiseAbs2();
  std::vector<double> w;
  w.reserve(static_cast<std::size_t>(k_star));
  w.push_back(std::sqrt(mod_sq.maxCoeff()));
  // A 1×2 block has σ_max equal to its Euclidean norm.
  if (k_star >= 2) w.push_back(std::sqrt(std::min(best_pair_norm_sq(mod_sq), 1.0)));
  for (int k = 3; k <= k_star; ++k) w.push_back(std::min(enumerate_order(u, k), 1.0));
  return w;
}

RealVector majorization_vector(const ComplexMatrix& u, int k_star) {
  const Index m = u.rows();
  if (k_star < 1 || k_star > m - 1)
    throw std::invalid_argument("majorization_vector: k_star " + std::to_string(k_star) +
                                " outside [1, M-1]");
  const std::vector<double> w = submatrix_singular_maxima(u, k_star);
  RealVector out = RealVector::Zero(m);
  out(0) = w[0];
  for (int k = 1; k < k_star; ++k) out(k) = w[static_cast<std::size_t>(k)] - w[static_cast<std::size_t>(k - 1)];
  out(k_star) = 1.0 - w.back();
  return out.cwiseMax(0.0).cwiseMin(1.0);
}

double majorization_bound(const ComplexMatrix& u, int k_star) {
  return shannon_entropy(majorization_vector(u, k_star));
}

BoundReport full_report(const ComplexMatrix& u, double entropy, const ReportConfig& config,
                        GeneratorDescriptor generator) {
  const Index m = u.rows();
  if (!(entropy >= 0.0) || entropy > std::log(static_cast<double>(m)) + 1e-12)
    throw std::invalid_argument("full_report: entropy outside [0, log M]");
  if (config.k_star < 1) throw std::invalid_argument("full_report: k_star must be >= 1");

  const BistochasticMatrix ubar = unistochastic(u);
  BoundReport r;
  if (generator.dim == 0) generator.dim = m;
  r.generator = std::move(generator);
  r.entropy = entropy;
  r.ladder = ladder(ubar, entropy, config.ladder);
  r.l_mu = maassen_uffink(ubar);
  r.l_1 = r.l_mu + entropy;
  r.l_dev = de_vicente(ubar);
  r.k_star = std::min<int>(config.k_star, static_cast<int>(m) - 1);
  r.l_maj = m > 1 ? majorization_bound(u, r.k_star) : 0.0;
  if (m == 1) r.k_star = 0;

  const double floor = 2.0 * entropy;
  r.coherence.ladder = std::max(0.0, r.ladder.best_value - floor);
  r.coherence.l_1 = std::max(0.0, r.l_1 - floor);
  r.coherence.l_dev = std::max(0.0, r.l_dev - floor);
  r.coherence.l_maj = std::max(0.0, r.l_maj - floor);
  return r;
}

}  // namespace eur
