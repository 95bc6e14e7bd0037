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

#include "eur/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "eur/generators.hpp"

namespace eur {

namespace {

constexpr double kChainMatchTol = 1e-12;

ComplexMatrix basis_vectors(const ComplexMatrix& u, Basis b) {
  return b == Basis::A ? ComplexMatrix(ComplexMatrix::Identity(u.rows(), u.cols())) : u;
}

DerivationCheck check_order(const ComplexMatrix& u, const MixedState& state, int n,
                            const ProbabilityVector& p_a, const ProbabilityVector& p_b,
                            double entropy, double l_n) {
  const std::vector<Basis> ends_a = alternating_pattern(Basis::A, n);
  const std::vector<Basis> ends_b = alternating_pattern(Basis::B, n);
  const ProbabilityVector q_a = simulate_chain(u, state, ends_a).final_distribution();
  const ProbabilityVector q_b = simulate_chain(u, state, ends_b).final_distribution();

  DerivationCheck c;
  c.n = n;
  c.sum_entropies = shannon_entropy(p_a) + shannon_entropy(p_b);
  const double d_sum = kl_divergence(p_a, q_a) + kl_divergence(p_b, q_b);
  const double c_sum = cross_entropy(p_a, q_a) + cross_entropy(p_b, q_b);
  const double weight = static_cast<double>(n) / (n + 1);

  if (std::isinf(d_sum)) {
    c.relative_slack = kInfiniteDivergence;
  } else {
    c.relative_slack = c.sum_entropies - d_sum / n - 2.0 * entropy;
    c.relative_ok = c.relative_slack >= -kOracleSlack;
  }
  if (std::isinf(c_sum)) {
    c.cross_slack = kInfiniteDivergence;
    c.ladder_slack = kInfiniteDivergence;
  } else {
    const double chain_value = c_sum / (n + 1) + 2.0 * weight * entropy;
    c.cross_slack = c.sum_entropies - chain_value;
    c.cross_ok = c.cross_slack >= -kOracleSlack;
    c.ladder_slack = chain_value - l_n;
    c.ladder_ok = c.ladder_slack >= -kOracleSlack;
  }
  return c;
}

void absorb(OracleSuiteResult& out, const ComplexMatrix& u, const MixedState& state, Index dim,
            std::uint64_t seed, int n_max) {
  ++out.instances;
  const double entropy = von_neumann_entropy(state.spectrum);
  const BistochasticMatrix ubar = unistochastic(u);
  const BoundLadder lad = ladder(ubar, entropy, LadderOptions{n_max, 0.0});

  const ProbabilityVector p_a = measurement_probabilities(u, state, Basis::A);
  const ProbabilityVector p_b = measurement_probabilities(u, state, Basis::B);
  const double sum = shannon_entropy(p_a) + shannon_entropy(p_b);

  for (const LadderEntry& e : lad.entries) {
    const double slack = sum - e.l_n;
    out.worst_ladder_slack = std::min(out.worst_ladder_slack, slack);
    if (slack < -kOracleSlack) {
      ++out.ladder_violations;
      out.violations.push_back({dim, seed, e.n, "ladder", slack});
    }
  }

  for (int n = 1; n <= n_max; ++n) {
    const double l_n = lad.entries[static_cast<std::size_t>(n - 1)].l_n;
    const DerivationCheck c = check_order(u, state, n, p_a, p_b, entropy, l_n);
    out.worst_relative_slack = std::min(out.worst_relative_slack, c.relative_slack);
    out.worst_cross_slack = std::min(out.worst_cross_slack, c.cross_slack);
    out.worst_step_slack = std::min(out.worst_step_slack, c.ladder_slack);
    if (!c.all_ok()) {
      ++out.derivation_violations;
      const char* which = !c.relative_ok ? "relative" : !c.cross_ok ? "cross" : "ladder-step";
      const double slack = !c.relative_ok ? c.relative_slack
                           : !c.cross_ok  ? c.cross_slack
                                          : c.ladder_slack;
      out.violations.push_back({dim, seed, n, which, slack});
    }

    const ProbabilityVector start_a = n % 2 == 0 ? p_a : p_b;
    const Basis first_a = n % 2 == 0 ? Basis::A : Basis::B;
    const ProbabilityVector stochastic = chain_propagate(ubar, start_a, first_a, n);
    const ProbabilityVector simulated =
        simulate_chain(u, state, alternating_pattern(Basis::A, n)).final_distribution();
    const double residual = max_abs(stochastic.values() - simulated.values());
    out.worst_chain_residual = std::max(out.worst_chain_residual, residual);
    if (residual > kChainMatchTol) {
      ++out.chain_mismatches;
      out.violations.push_back({dim, seed, n, "chain-match", residual});
    }
  }
}

}  // namespace

std::vector<Basis> alternating_pattern(Basis last, int n) {
  if (n < 0) throw std::invalid_argument("alternating_pattern: negative order");
  std::vector<Basis> pattern(static_cast<std::size_t>(n + 1));
  for (int t = 0; t <= n; ++t) pattern[static_cast<std::size_t>(t)] = (n - t) % 2 == 0 ? last : other(last);
  return pattern;
}

ChainTrace simulate_chain(const ComplexMatrix& u, const MixedState& state,
                          std::span<const Basis> pattern) {
  if (pattern.empty()) throw std::invalid_argument("simulate_chain: empty pattern");
  if (u.rows() != state.eigenvectors.rows())
    throw std::invalid_argument("simulate_chain: dimension mismatch");

  const ComplexMatrix basis_a = basis_vectors(u, Basis::A);
  const ComplexMatrix& basis_b = u;
  ComplexMatrix rho = state.density();

  ChainTrace trace;
  trace.pattern.assign(pattern.begin(), pattern.end());
  for (const Basis label : pattern) {
    const ComplexMatrix& x = label == Basis::A ? basis_a : basis_b;
    const Index m = x.cols();
    RealVector q(m);
    ComplexMatrix next = ComplexMatrix::Zero(m, m);
    for (Index i = 0; i < m; ++i) {
      const auto xi = x.col(i);
      const double qi = std::max(0.0, xi.dot(rho * xi).real());
      q(i) = qi;
      next.noalias() += qi * (xi * xi.adjoint());
    }
    rho = std::move(next);
    trace.stages.emplace_back(std::move(q));
  }
  return trace;
}

DerivationCheck verify_derivation_chain(const ComplexMatrix& u, const MixedState& state, int n) {
  if (n < 1) throw std::invalid_argument("verify_derivation_chain: n must be >= 1");
  return verify_derivation_chains(u, state, n).back();
}

std::vector<DerivationCheck> verify_derivation_chains(const ComplexMatrix& u,
                                                      const MixedState& state, int n_max) {
  if (n_max < 1) throw std::invalid_argument("verify_derivation_chains: n_max must be >= 1");
  const double entropy = von_neumann_entropy(state.spectrum);
  const BoundLadder lad = ladder(unistochastic(u), entropy, LadderOptions{n_max, 0.0});
  const ProbabilityVector p_a = measurement_probabilities(u, state, Basis::A);
  const ProbabilityVector p_b = measurement_probabilities(u, state, Basis::B);
  std::vector<DerivationCheck> out;
  for (int n = 1; n <= n_max; ++n)
    out.push_back(check_order(u, state, n, p_a, p_b, entropy,
                              lad.entries[static_cast<std::size_t>(n - 1)].l_n));
  return out;
}

LadderBoundCheck verify_ladder_bound(const ComplexMatrix& u, double entropy, int trials,
                                     std::uint64_t seed, const LadderOptions& options) {
  if (trials < 1) throw std::invalid_argument("verify_ladder_bound: trials must be >= 1");
  const Spectrum spectrum = spectrum_for_entropy(u.rows(), entropy);
  LadderBoundCheck out;
  out.trials = trials;
  out.best_bound = ladder(unistochastic(u), entropy, options).best_value;
  out.min_entropy_sum = std::numeric_limits<double>::infinity();
  out.worst_slack = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(t);
    const MixedState state = make_state(u, spectrum, Frame::Random, s);
    const double sum = shannon_entropy(measurement_probabilities(u, state, Basis::A)) +
                       shannon_entropy(measurement_probabilities(u, state, Basis::B));
    out.min_entropy_sum = std::min(out.min_entropy_sum, sum);
    const double slack = sum - out.best_bound;
    if (slack < out.worst_slack) {
      out.worst_slack = slack;
      out.worst_seed = s;
    }
    if (slack < -kOracleSlack) ++out.violations;
  }
  return out;
}

Spectrum random_spectrum(Index m, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::exponential_distribution<double> expo(1.0);
  RealVector v(m);
  for (Index i = 0; i < m; ++i) v(i) = expo(rng);
  v /= v.sum();
  std::sort(v.data(), v.data() + m, std::greater<>());
  return Spectrum{std::move(v), 0.0};
}

OracleSuiteResult run_oracle_suite(std::span<const Index> dims, int trials, std::uint64_t seed,
                                   int n_max) {
  if (trials < 1) throw std::invalid_argument("run_oracle_suite: trials must be >= 1");
  OracleSuiteResult out;
  for (const Index m : dims) {
    if (m < 2) throw std::invalid_argument("run_oracle_suite: dimensions must be >= 2");
    for (int t = 0; t < trials; ++t) {
      const std::uint64_t s = seed + static_cast<std::uint64_t>(t);
      const ComplexMatrix u = haar_random(m, s);
      const MixedState state = make_state(u, random_spectrum(m, s), Frame::Random, s + 0x5bd1e995ULL);
      absorb(out, u, state, m, s, n_max);
    }
  }
  return out;
}

OracleSuiteResult run_oracle_suite(const ComplexMatrix& u, int trials, std::uint64_t seed,
                                   int n_max) {
  if (trials < 1) throw std::invalid_argument("run_oracle_suite: trials must be >= 1");
  OracleSuiteResult out;
  const Index m = u.rows();
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(t);
    const MixedState state = make_state(u, random_spectrum(m, s), Frame::Random, s);
    absorb(out, u, state, m, s, n_max);
  }
  return out;
}

}  // namespace eur
