#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>

#include "beamtrain/errors.hpp"
#include "beamtrain/training.hpp"

using namespace beamtrain;
using cd = std::complex<double>;

namespace {

// Observation set whose column energies are exactly `energies`.
ObservationSet with_energies(const std::vector<double>& energies) {
  ObservationSet obs;
  obs.columns = Eigen::MatrixXcd::Zero(2, static_cast<Eigen::Index>(energies.size()));
  for (std::size_t n = 0; n < energies.size(); ++n) {
    obs.columns(0, static_cast<Eigen::Index>(n)) = std::sqrt(energies[n]);
    obs.rotations.push_back(static_cast<int>(n));
  }
  return obs;
}

ObservationSet random_observations(Rng& rng, int chains, int trials) {
  ObservationSet obs;
  obs.columns.resize(chains, trials);
  // Vary the per-column scale so weights span several orders of magnitude.
  for (int n = 0; n < trials; ++n)
    obs.columns.col(n) = complex_gaussian_vector(rng, chains, std::pow(10.0, uniform(rng, -3, 3)));
  for (int n = 0; n < trials; ++n) obs.rotations.push_back(n);
  return obs;
}

}  // namespace

TEST_CASE("compute_weights") {
  SUBCASE("equal energies") {
    const auto w = compute_weights(with_energies({1, 1, 1, 1}));
    for (double x : w.weights) CHECK(x == doctest::Approx(0.25).epsilon(1e-15));
  }
  SUBCASE("three to one") {
    const auto w = compute_weights(with_energies({3, 1}));
    CHECK(w.weights[0] == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(w.weights[1] == doctest::Approx(0.25).epsilon(1e-15));
  }
  SUBCASE("weights sum to one and lie in [0, 1]") {
    Rng rng(31);
    for (int trial = 0; trial < 1000; ++trial) {
      const auto w = compute_weights(random_observations(rng, 4, 8));
      const double sum = std::accumulate(w.weights.begin(), w.weights.end(), 0.0);
      CHECK(std::abs(sum - 1.0) <= 1e-12);
      for (double x : w.weights) {
        CHECK(x >= 0.0);
        CHECK(x <= 1.0);
      }
    }
  }
  SUBCASE("all-zero observations are degenerate") {
    CHECK_THROWS_AS(compute_weights(with_energies({0, 0, 0})), DegenerateObservationError);
  }
}

TEST_CASE("com_estimate") {
  const auto cb = make_codebook(8, 8);

  SUBCASE("all energy in the first trial returns the identity assignment") {
    const auto est = com_estimate(with_energies({1, 0, 0, 0, 0, 0, 0, 0}), cb, NormalizationMode::kRaw);
    CHECK(est.vectors == cb.matrix());
  }
  SUBCASE("all energy in the second trial puts the last codeword on subarray 0") {
    const auto est = com_estimate(with_energies({0, 1, 0, 0, 0, 0, 0, 0}), cb, NormalizationMode::kRaw);
    CHECK(est.vectors.col(0) == cb.codeword(7));
    CHECK(est.vectors.col(1) == cb.codeword(0));
  }
  SUBCASE("uniform energy collapses every subarray onto the first basis direction") {
    const auto est = com_estimate(with_energies(std::vector<double>(8, 2.0)), cb, NormalizationMode::kRaw);
    // Oracle: average of the DFT columns, evaluated directly.
    Eigen::VectorXcd avg = Eigen::VectorXcd::Zero(8);
    for (int j = 0; j < 8; ++j) avg += cb.codeword(j) / 8.0;
    CHECK(std::abs(avg(0) - cd(1.0 / std::sqrt(8.0), 0.0)) < 1e-14);
    CHECK(avg.tail(7).cwiseAbs().maxCoeff() < 1e-14);
    for (int k = 0; k < 8; ++k) CHECK((est.vectors.col(k) - avg).cwiseAbs().maxCoeff() < 1e-14);
  }
  SUBCASE("one-hot recovery for every trial and size") {
    for (int n = 1; n <= 8; ++n) {
      const auto book = make_codebook(n, 8);
      for (int trial = 0; trial < n; ++trial) {
        std::vector<double> e(static_cast<std::size_t>(n), 0.0);
        e[static_cast<std::size_t>(trial)] = 5.0;
        const auto est = com_estimate(with_energies(e), book, NormalizationMode::kRaw);
        CHECK(est.precoder().entries == assemble_precoder(book, rotate(n, trial)).entries);
      }
    }
  }
  SUBCASE("normalization modes") {
    Rng rng(17);
    for (int trial = 0; trial < 300; ++trial) {
      const auto obs = random_observations(rng, 4, 8);
      const auto raw = com_estimate(obs, cb, NormalizationMode::kRaw);
      const auto unit = com_estimate(obs, cb, NormalizationMode::kUnitNorm);
      const auto modulus = com_estimate(obs, cb, NormalizationMode::kUnitModulus);
      for (int k = 0; k < 8; ++k) {
        CHECK(raw.vectors.col(k).norm() <= 1.0 + 1e-12);
        CHECK(std::abs(unit.vectors.col(k).norm() - 1.0) <= 1e-12);
        // Same direction as the raw estimate.
        const cd overlap = unit.vectors.col(k).dot(raw.vectors.col(k));
        CHECK(std::abs(overlap - cd(raw.vectors.col(k).norm(), 0.0)) <= 1e-12);
      }
      CHECK((modulus.vectors.cwiseAbs().array() - 1.0 / std::sqrt(8.0)).abs().maxCoeff() <= 1e-12);
    }
  }
  SUBCASE("scaling the observations does not change the estimate") {
    Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
      auto obs = random_observations(rng, 4, 8);
      const auto before = com_estimate(obs, cb, NormalizationMode::kUnitNorm);
      obs.columns *= uniform(rng, 0.01, 100.0);
      const auto after = com_estimate(obs, cb, NormalizationMode::kUnitNorm);
      CHECK((before.vectors - after.vectors).cwiseAbs().maxCoeff() <= 1e-13);
    }
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(com_estimate(with_energies(std::vector<double>(8, 0.0)), cb, NormalizationMode::kRaw),
                    DegenerateObservationError);
    CHECK_THROWS_AS(com_estimate(with_energies({1, 2, 3}), cb, NormalizationMode::kRaw), ConfigError);
  }
}

TEST_CASE("baseline_select") {
  SUBCASE("argmax") {
    CHECK(baseline_select(with_energies({0.1, 0.9, 0.3}), make_codebook(3, 3)).rotation == 1);
  }
  SUBCASE("ties go to the first trial") {
    CHECK(baseline_select(with_energies({0.5, 0.5}), make_codebook(2, 2)).rotation == 0);
    CHECK(baseline_select(with_energies({0, 0, 0}), make_codebook(3, 3)).rotation == 0);
  }
  SUBCASE("synthetic channel that favours the third trial") {
    const int n = 3, m = 3;
    const auto cb = make_codebook(n, m);
    // Subarray 0 transmits codeword 1 only under rotation 2; match H to it.
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(1, n * m);
    h.block(0, 0, 1, m) = cb.codeword(1).adjoint();
    const Eigen::MatrixXcd w = Eigen::MatrixXcd::Ones(1, 1);
    Rng rng(1);
    const auto obs = run_training_trials(h, cb, w, 1.0, 0.0, rng, SignalMode::kPilot);

    // Brute force: evaluate each rotation's received energy directly.
    int best = -1;
    double best_energy = -1.0;
    const Eigen::VectorXcd s = Eigen::VectorXcd::Constant(n, 1.0 / std::sqrt(n));
    for (int r = 0; r < n; ++r) {
      const double e = (w * h * assemble_precoder(cb, rotate(n, r)).entries * s).squaredNorm();
      if (e > best_energy) {
        best_energy = e;
        best = r;
      }
    }
    REQUIRE(best == 2);
    const auto choice = baseline_select(obs, cb);
    CHECK(choice.rotation == 2);
    CHECK(choice.precoder.entries == assemble_precoder(cb, rotate(n, 2)).entries);
  }
  SUBCASE("always one of the scheduled precoders, invariant to scale") {
    Rng rng(41);
    const auto cb = make_codebook(8, 8);
    for (int trial = 0; trial < 200; ++trial) {
      auto obs = random_observations(rng, 4, 8);
      const auto choice = baseline_select(obs, cb);
      REQUIRE(choice.rotation >= 0);
      REQUIRE(choice.rotation < 8);
      CHECK(choice.precoder.entries == assemble_precoder(cb, rotate(8, choice.rotation)).entries);
      obs.columns *= 3.7;
      CHECK(baseline_select(obs, cb).rotation == choice.rotation);
    }
  }
}

TEST_CASE("trn_schedule") {
  SUBCASE("eight trials over two units") {
    const auto s = trn_schedule(8, 2, 4);
    CHECK(s.units == 2);
    CHECK(s.t_n == 1);
    CHECK(s.slots[4].unit == 1);
    CHECK(s.slots[4].subfield == 0);
    CHECK(s.absolute_subfield(4) == 2);
  }
  SUBCASE("one unit") {
    CHECK(trn_schedule(8, 0, 8).units == 1);
  }
  SUBCASE("partial last unit") {
    const auto s = trn_schedule(8, 1, 3);
    CHECK(s.units == 3);
    CHECK(s.trials_in_unit(0) == 3);
    CHECK(s.trials_in_unit(2) == 2);
  }
  SUBCASE("every trial lands in exactly one slot, in order") {
    for (int t_m = 1; t_m <= 9; ++t_m) {
      const auto s = trn_schedule(17, 0, t_m);
      CHECK(s.slots.size() == 17u);
      for (int n = 1; n < 17; ++n) {
        const auto& prev = s.slots[n - 1];
        const auto& cur = s.slots[n];
        CHECK((cur.unit > prev.unit || (cur.unit == prev.unit && cur.subfield == prev.subfield + 1)));
      }
    }
  }
  SUBCASE("T_M = 0 is rejected") {
    CHECK_THROWS_AS(trn_schedule(8, 0, 0), ConfigError);
  }
}
