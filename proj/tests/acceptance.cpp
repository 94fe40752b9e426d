// Acceptance suite: runs every exit criterion at its pinned tolerance and
// prints one PASS/FAIL line per criterion. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "beamtrain/channel.hpp"
#include "beamtrain/codebook.hpp"
#include "beamtrain/config.hpp"
#include "beamtrain/metrics.hpp"
#include "beamtrain/report.hpp"
#include "beamtrain/sweep.hpp"
#include "beamtrain/training.hpp"
#include "oracles.hpp"

using namespace beamtrain;
namespace fs = std::filesystem;
using std::numbers::pi;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double time_limit_s;  // 0 means no runtime bound
  std::function<Outcome()> body;
};

int failures = 0;

void report(const std::string& id, const std::string& title, bool passed,
            const std::string& detail) {
  std::printf("%s  [%s] %s: %s\n", passed ? "PASS" : "FAIL", id.c_str(), title.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!passed) ++failures;
}

void run(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = c.body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char timing[96];
  std::snprintf(timing, sizeof timing, " (%.3f s", elapsed);
  std::string detail = out.detail + timing;
  if (c.time_limit_s > 0.0) {
    char limit[48];
    std::snprintf(limit, sizeof limit, ", limit %.0f s", c.time_limit_s);
    detail += limit;
    if (elapsed >= c.time_limit_s) out.passed = false;
  }
  detail += ")";
  report(c.id, c.title, out.passed, detail);
}

std::string num(double v, const char* fmt = "%.6g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

Outcome codebook_properties() {
  double worst_gram = 0.0, worst_modulus = 0.0;
  for (auto [n, m] : {std::pair{2, 2}, {4, 8}, {8, 8}}) {
    const Codebook cb = make_codebook(n, m);
    const Eigen::MatrixXcd gram = cb.matrix().adjoint() * cb.matrix();
    worst_gram = std::max(worst_gram,
                          (gram - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff());
    worst_modulus = std::max(
        worst_modulus, (cb.matrix().cwiseAbs().array() - 1.0 / std::sqrt(m)).abs().maxCoeff());
  }
  return {worst_gram <= 1e-12 && worst_modulus <= 1e-12,
          "max |G - I| = " + num(worst_gram) + ", max ||a|-1/sqrt(M)| = " + num(worst_modulus) +
              " (tol 1e-12)"};
}

Outcome channel_normalization() {
  const SimConfig c;
  double sum = 0.0;
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) {
    Rng rng = derive_stream(0xC0FFEE, 0, static_cast<std::uint64_t>(i));
    sum += assemble_channel(sample_paths(rng, c.paths, c.aod_range, c.aoa_range), c.rx_antennas,
                            c.tx_antennas(), c.d_over_lambda)
               .squaredNorm();
  }
  const double mean = sum / draws;
  const double target = c.tx_antennas() * c.rx_antennas;
  const double rel = std::abs(mean - target) / target;
  return {rel <= 0.03, "mean ||H||_F^2 = " + num(mean) + " vs " + num(target) +
                           ", rel err " + num(100 * rel, "%.3f") + "% (tol 3%)"};
}

Outcome capacity_oracle() {
  Rng rng(31415);
  double worst = 0.0;
  int non_monotone = 0;
  for (int i = 0; i < 100; ++i) {
    auto in = testing::random_capacity_instance(rng);
    const double c = capacity(in).bits_per_s_per_hz;
    worst = std::max(worst, std::abs(c - testing::eigen_capacity_oracle(in)));
    in.rho *= 2.0;
    if (capacity(in).bits_per_s_per_hz < c) ++non_monotone;
  }
  return {worst <= 1e-9 && non_monotone == 0,
          "max |logdet - eig| = " + num(worst) + " (tol 1e-9), " + std::to_string(non_monotone) +
              " decreases when rho doubled, 100 instances"};
}

Outcome algorithm_consistency() {
  Rng rng(2718);
  int recovery_failures = 0, sum_failures = 0, norm_failures = 0;
  double worst_sum = 0.0, worst_norm = 0.0;
  const int sets = 2000;
  for (int t = 0; t < sets; ++t) {
    const int n = 1 + static_cast<int>(uniform(rng, 0, 8));
    const int m = n + static_cast<int>(uniform(rng, 0, 8));
    const int k = 1 + static_cast<int>(uniform(rng, 0, 4));
    const Codebook cb = make_codebook(n, m);

    ObservationSet obs;
    obs.columns.resize(k, n);
    for (int i = 0; i < n; ++i) {
      obs.columns.col(i) = complex_gaussian_vector(rng, k, std::pow(10.0, uniform(rng, -4, 4)));
      obs.rotations.push_back(i);
    }
    const TrialWeights w = compute_weights(obs);
    double sum = 0.0;
    for (double x : w.weights) sum += x;
    worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
    if (std::abs(sum - 1.0) > 1e-12) ++sum_failures;

    const auto raw = com_estimate(w, cb, NormalizationMode::kRaw);
    for (int col = 0; col < n; ++col) {
      const double norm = raw.vectors.col(col).norm();
      worst_norm = std::max(worst_norm, norm);
      if (norm > 1.0 + 1e-12) ++norm_failures;
    }

    // One-hot energy at a random trial: every subarray must get exactly the
    // codeword it transmitted in that trial.
    const int hot = static_cast<int>(uniform(rng, 0, n));
    ObservationSet one_hot = obs;
    for (int i = 0; i < n; ++i)
      if (i != hot) one_hot.columns.col(i).setZero();
    const auto est = com_estimate(one_hot, cb, NormalizationMode::kRaw);
    const auto sent = rotate(n, hot);
    for (int col = 0; col < n; ++col)
      if (est.vectors.col(col) != cb.codeword(sent.codeword_of_subarray[static_cast<std::size_t>(col)]))
        ++recovery_failures;
  }
  return {recovery_failures == 0 && sum_failures == 0 && norm_failures == 0,
          std::to_string(sets) + " observation sets: " + std::to_string(recovery_failures) +
              " one-hot mismatches, max |sum w - 1| = " + num(worst_sum) +
              ", max raw norm = " + num(worst_norm, "%.15f")};
}

SimConfig reference_config() {
  SimConfig c;  // N=8, M=8, N_t=64, N_r=16, K=4, L=3
  c.snr_grid_db = snr_grid(0.0, 20.0, 5.0);
  c.mc_iterations = 500;
  return c;
}

SweepResult reference_sweep;

Outcome gain_sweep() {
  reference_sweep = run_sweep(reference_config(), {1, false});
  std::string detail = "gain by SNR:";
  for (const auto& p : reference_sweep.points)
    detail += " " + num(p.snr_db, "%.0f") + "dB:" + num(p.mean_gain, "%+.4f");
  return {true, detail};
}

Outcome gain_positive() {
  std::string worst;
  bool ok = true;
  for (const auto& p : reference_sweep.points) {
    if (!(p.mean_com > p.mean_baseline)) {
      ok = false;
      worst += " " + num(p.snr_db, "%.0f") + "dB";
    }
  }
  return {ok, ok ? "mean COM > mean baseline at all " +
                       std::to_string(reference_sweep.points.size()) + " points"
                 : "COM not above baseline at" + worst};
}

Outcome gain_grows() {
  const double g0 = reference_sweep.points.front().mean_gain;
  const double g20 = reference_sweep.points.back().mean_gain;
  return {g20 > g0, "gain(20 dB) = " + num(g20) + " vs gain(0 dB) = " + num(g0)};
}

Outcome gain_band() {
  const double g20 = reference_sweep.points.back().mean_gain;
  return {g20 >= 1.0 && g20 <= 7.0,
          "gain(20 dB) = " + num(g20) + " bit/s/Hz, required band [1, 7]"};
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  const fs::path dir = fs::temp_directory_path() / "beamtrain_acceptance";
  fs::create_directories(dir);
  const SimConfig c = reference_config();
  emit_csv(run_sweep(c, {1, false}), (dir / "run1.csv").string());
  emit_csv(run_sweep(c, {1, false}), (dir / "run2.csv").string());
  emit_csv(run_sweep(c, {4, false}), (dir / "run4.csv").string());
  const std::string a = read_file(dir / "run1.csv");
  const bool same_seed = a == read_file(dir / "run2.csv");
  const bool workers = a == read_file(dir / "run4.csv");
  const bool matches_reference = a == csv_text(reference_sweep);
  return {same_seed && workers && matches_reference && !a.empty(),
          std::string("repeat run ") + (same_seed ? "identical" : "DIFFERS") + ", 4 workers " +
              (workers ? "identical" : "DIFFERS") + ", vs criterion-5 sweep " +
              (matches_reference ? "identical" : "DIFFERS")};
}

Outcome rank_property() {
  const SimConfig c;
  int worst = 0;
  for (int i = 0; i < 100; ++i) {
    Rng rng = derive_stream(777, 0, static_cast<std::uint64_t>(i));
    const auto h = assemble_channel(sample_paths(rng, 3, c.aod_range, c.aoa_range), c.rx_antennas,
                                    c.tx_antennas(), c.d_over_lambda);
    worst = std::max(worst, numerical_rank(h, 1e-9));
  }
  return {worst <= 3, "max numerical rank over 100 channels = " + std::to_string(worst) +
                          " (L = 3, rel tol 1e-9)"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"1", "codebook orthonormal, constant modulus", 1.0, codebook_properties},
      {"2", "E||H||_F^2 = N_t N_r", 10.0, channel_normalization},
      {"3", "capacity matches eigenvalue oracle, monotone in rho", 5.0, capacity_oracle},
      {"4", "COM estimator self-consistency", 0.0, algorithm_consistency},
      {"5", "paired sweep 0..20 dB, 500 iterations (single worker)", 60.0, gain_sweep},
      {"5a", "COM beats baseline at every SNR", 0.0, gain_positive},
      {"5b", "gain at 20 dB exceeds gain at 0 dB", 0.0, gain_grows},
      {"5c", "gain at 20 dB within [1, 7] bit/s/Hz", 0.0, gain_band},
      {"6", "byte-identical CSV across runs and worker counts", 0.0, determinism},
      {"7", "channel rank <= L", 0.0, rank_property},
  };
  for (const auto& c : criteria) run(c);
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
