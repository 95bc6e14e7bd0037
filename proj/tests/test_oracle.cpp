#include <doctest.h>

#include <array>
#include <numbers>

#include "eur/generators.hpp"
#include "eur/oracle.hpp"

using namespace eur;

TEST_CASE("alternating patterns end in the requested basis") {
  const auto p = alternating_pattern(Basis::A, 2);
  CHECK(p == std::vector<Basis>{Basis::A, Basis::B, Basis::A});
  const auto q = alternating_pattern(Basis::A, 3);
  CHECK(q == std::vector<Basis>{Basis::B, Basis::A, Basis::B, Basis::A});
  CHECK(alternating_pattern(Basis::B, 0) == std::vector<Basis>{Basis::B});
}

TEST_CASE("amplitude simulation of the qubit chain") {
  const ComplexMatrix u = qubit_rotation(std::numbers::pi / 6);
  const MixedState s = make_state(u, spectrum_for_entropy(2, 0.0), Frame::ADiagonal);
  const std::array<Basis, 3> aba{Basis::A, Basis::B, Basis::A};
  const ChainTrace t = simulate_chain(u, s, aba);
  REQUIRE(t.stages.size() == 3);
  CHECK(t.stages[1](0) == doctest::Approx(0.75));
  CHECK(t.final_distribution()(0) == doctest::Approx(0.625).epsilon(1e-14));
  CHECK(t.final_distribution()(1) == doctest::Approx(0.375).epsilon(1e-14));
}

TEST_CASE("amplitude simulation selects UU^T for A-B-A") {
  const std::array<Basis, 3> aba{Basis::A, Basis::B, Basis::A};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ComplexMatrix u = haar_random(3, seed);
    const MixedState s = make_state(u, random_spectrum(3, seed), Frame::Random, seed + 99);
    const RealMatrix ub = unistochastic(u).matrix();
    const RealVector pa = measurement_probabilities(u, s, Basis::A).values();
    const RealVector sim = simulate_chain(u, s, aba).final_distribution().values();
    CHECK(max_abs(sim - ub * ub.transpose() * pa) < 1e-12);
  }
  // A witness that the two orders differ.
  const ComplexMatrix u = haar_random(3, 5);
  const RealMatrix ub = unistochastic(u).matrix();
  const RealVector pa{{1.0, 0.0, 0.0}};
  CHECK(max_abs(ub * ub.transpose() * pa - ub.transpose() * ub * pa) > 1e-3);
}

TEST_CASE("derivation chain is tight for an eigenstate of mutually unbiased qubit bases") {
  const ComplexMatrix u = qubit_rotation(std::numbers::pi / 4);
  const MixedState s = make_state(u, spectrum_for_entropy(2, 0.0), Frame::ADiagonal);
  const DerivationCheck c = verify_derivation_chain(u, s, 1);
  CHECK(c.all_ok());
  CHECK(c.sum_entropies == doctest::Approx(std::log(2.0)));
  CHECK(std::abs(c.cross_slack) < 1e-12);
  CHECK(std::abs(c.ladder_slack) < 1e-12);
}

TEST_CASE("derivation chains hold for random instances") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Index m = 2 + static_cast<Index>(seed % 4);
    const ComplexMatrix u = haar_random(m, seed);
    const MixedState s = make_state(u, random_spectrum(m, seed + 1), Frame::Random, seed + 2);
    for (const auto& c : verify_derivation_chains(u, s, 10)) CHECK(c.all_ok());
  }
}

TEST_CASE("ladder bound holds on sampled states") {
  const LadderBoundCheck c = verify_ladder_bound(qft_power(3, 0.6), 0.4, 200, 11);
  CHECK(c.trials == 200);
  CHECK(c.violations == 0);
  CHECK(c.worst_slack >= -kOracleSlack);
}

TEST_CASE("oracle suite") {
  const std::array<Index, 3> dims{2, 3, 4};
  const OracleSuiteResult r = run_oracle_suite(dims, 40, 7, 8);
  CHECK(r.instances == 120);
  CHECK(r.passed());
  CHECK(r.worst_chain_residual < 1e-12);

  const OracleSuiteResult one = run_oracle_suite(spin_rotation(4, 0.3), 30, 1, 8);
  CHECK(one.passed());
}

TEST_CASE("random spectra") {
  const Spectrum s = random_spectrum(6, 3);
  CHECK(s.values.sum() == doctest::Approx(1.0));
  for (Index k = 1; k < 6; ++k) CHECK(s.values(k) <= s.values(k - 1));
}
