#include "beamtrain/selftest.hpp"

#include <cmath>
#include <functional>

#include "beamtrain/channel.hpp"
#include "beamtrain/codebook.hpp"
#include "beamtrain/config.hpp"
#include "beamtrain/metrics.hpp"
#include "beamtrain/report.hpp"
#include "beamtrain/sweep.hpp"
#include "beamtrain/training.hpp"
#include "beamtrain/transceiver.hpp"

namespace beamtrain {

namespace {

constexpr double kTight = 1e-12;

SelftestCheck check(const std::string& name, const std::function<std::string()>& body) {
  SelftestCheck result{name, false, {}};
  try {
    result.detail = body();
    result.passed = result.detail.empty();
  } catch (const std::exception& e) {
    result.detail = std::string("exception: ") + e.what();
  }
  return result;
}

}  // namespace

std::vector<SelftestCheck> run_selftest() {
  std::vector<SelftestCheck> checks;

  checks.push_back(check("codebook orthonormal and constant modulus", [] {
    for (auto [n, m] : {std::pair{2, 2}, {4, 8}, {8, 8}}) {
      const Codebook cb = make_codebook(n, m);
      const Eigen::MatrixXcd gram = cb.matrix().adjoint() * cb.matrix();
      const double gram_err = (gram - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
      const double mod_err =
          (cb.matrix().cwiseAbs().array() - 1.0 / std::sqrt(m)).abs().maxCoeff();
      if (gram_err > kTight || mod_err > kTight)
        return "N=" + std::to_string(n) + " M=" + std::to_string(m) + " off by " +
               format_double(std::max(gram_err, mod_err));
    }
    return std::string();
  }));

  checks.push_back(check("ULA response unit norm", [] {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const int u = 1 + trial % 32;
      const auto f = ula_response(uniform(rng, -3.2, 3.2), {u, 0.5});
      if (std::abs(f.norm() - 1.0) > kTight) return std::string("norm deviates from 1");
    }
    return std::string();
  }));

  checks.push_back(check("omni combiner rows orthonormal", [] {
    const Eigen::MatrixXcd w = omni_combiner(16, 4).combined();
    const double err = (w * w.adjoint() - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff();
    return err > kTight ? "W W^H - I = " + format_double(err) : std::string();
  }));

  checks.push_back(check("trial weights sum to one", [] {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      ObservationSet obs{complex_gaussian_vector(rng, 32, 1.0).reshaped(4, 8), {}};
      const auto w = compute_weights(obs);
      double sum = 0.0;
      for (double x : w.weights) sum += x;
      if (std::abs(sum - 1.0) > kTight) return "sum = " + format_double(sum);
    }
    return std::string();
  }));

  checks.push_back(check("one-hot energy recovers the transmitted rotation", [] {
    const Codebook cb = make_codebook(8, 8);
    for (int trial = 0; trial < 8; ++trial) {
      TrialWeights w{std::vector<double>(8, 0.0)};
      w.weights[static_cast<std::size_t>(trial)] = 1.0;
      const auto est = com_estimate(w, cb, NormalizationMode::kRaw);
      const auto expected = assemble_precoder(cb, rotate(8, trial));
      if (est.precoder().entries != expected.entries)
        return "mismatch at trial " + std::to_string(trial);
    }
    return std::string();
  }));

  checks.push_back(check("capacity nondecreasing in rho", [] {
    Rng rng(3);
    const Eigen::MatrixXcd w = omni_combiner(16, 4).combined();
    const Codebook cb = make_codebook(8, 8);
    for (int trial = 0; trial < 50; ++trial) {
      const auto h = assemble_channel(
          sample_paths(rng, 3, {-0.5, 0.5}, {-3.1, 3.1}), 16, 64);
      const auto a = assemble_precoder(cb, rotate(8, trial % 8));
      const double c1 = evaluate_method(h, a, w, 1.0, 0.1).bits_per_s_per_hz;
      const double c2 = evaluate_method(h, a, w, 2.0, 0.1).bits_per_s_per_hz;
      if (c2 < c1) return std::string("capacity dropped when rho doubled");
    }
    return std::string();
  }));

  checks.push_back(check("channel rank bounded by path count", [] {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      const auto h = assemble_channel(
          sample_paths(rng, 3, {-0.5, 0.5}, {-3.1, 3.1}), 16, 64);
      if (numerical_rank(h) > 3) return std::string("rank exceeds L");
    }
    return std::string();
  }));

  checks.push_back(check("sweep independent of worker count", [] {
    SimConfig config;
    config.snr_grid_db = {0.0, 10.0};
    config.mc_iterations = 8;
    const std::string one = csv_text(run_sweep(config, {1, false}));
    const std::string four = csv_text(run_sweep(config, {4, false}));
    return one == four ? std::string() : std::string("CSV differs between 1 and 4 workers");
  }));

  return checks;
}

}  // namespace beamtrain
