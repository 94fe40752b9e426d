#include "beamtrain/sweep.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "beamtrain/channel.hpp"
#include "beamtrain/codebook.hpp"
#include "beamtrain/errors.hpp"
#include "beamtrain/metrics.hpp"
#include "beamtrain/random.hpp"
#include "beamtrain/training.hpp"
#include "beamtrain/transceiver.hpp"

namespace beamtrain {

void RunningStats::add(double value) {
  ++count_;
  const double delta = value - mean_;
  mean_ += delta / count_;
  m2_ += delta * (value - mean_);
}

double RunningStats::stddev() const {
  if (count_ < 2) return 0.0;
  return std::sqrt(m2_ / (count_ - 1));
}

namespace {

constexpr double kRho = 1.0;

double noise_variance(double snr_db) { return std::pow(10.0, -snr_db / 10.0); }

// Immutable per-sweep objects shared by all cells.
struct SweepContext {
  Codebook codebook;
  Eigen::MatrixXcd combiner;
};

SweepContext make_context(const SimConfig& config) {
  return {make_codebook(config.streams, config.subarray_size),
          omni_combiner(config.rx_antennas, config.rx_chains).combined()};
}

IterationOutcome run_cell(const SimConfig& config, const SweepContext& ctx,
                          int snr_index, int iteration) {
  Rng rng = derive_stream(config.master_seed, static_cast<std::uint64_t>(snr_index),
                          static_cast<std::uint64_t>(iteration));
  const double sigma2 = noise_variance(config.snr_grid_db[static_cast<std::size_t>(snr_index)]);

  const PathSet paths = sample_paths(rng, config.paths, config.aod_range, config.aoa_range);
  const ChannelMatrix h = assemble_channel(paths, config.rx_antennas,
                                           config.tx_antennas(), config.d_over_lambda);
  const ObservationSet obs = run_training_trials(h, ctx.codebook, ctx.combiner, kRho,
                                                 sigma2, rng, config.signal_mode);

  const EstimatedAwvs com = com_estimate(obs, ctx.codebook, config.normalization_mode);
  const BaselineChoice base = baseline_select(obs, ctx.codebook);

  IterationOutcome out;
  out.com = evaluate_method(h, com.precoder(), ctx.combiner, kRho, sigma2).bits_per_s_per_hz;
  out.baseline =
      evaluate_method(h, base.precoder, ctx.combiner, kRho, sigma2).bits_per_s_per_hz;
  out.baseline_rotation = base.rotation;
  return out;
}

std::string cell_context(const SimConfig& config, int snr_index, int iteration) {
  return "snr index " + std::to_string(snr_index) + " (" +
         format_double(config.snr_grid_db[static_cast<std::size_t>(snr_index)]) +
         " dB), iteration " + std::to_string(iteration) + ": ";
}

}  // namespace

IterationOutcome run_iteration(const SimConfig& config, int snr_index, int iteration) {
  validate(config);
  if (snr_index < 0 || snr_index >= static_cast<int>(config.snr_grid_db.size()))
    throw ConfigError("run_iteration: snr index out of range");
  return run_cell(config, make_context(config), snr_index, iteration);
}

SweepResult run_sweep(const SimConfig& config, const SweepOptions& options) {
  validate(config);
  if (options.workers < 1) throw ConfigError("workers: must be >= 1");

  const SweepContext ctx = make_context(config);
  const int points = static_cast<int>(config.snr_grid_db.size());
  const int iterations = config.mc_iterations;
  const long total = static_cast<long>(points) * iterations;

  std::vector<IterationOutcome> cells(static_cast<std::size_t>(total));
  std::atomic<long> next{0};
  std::mutex error_mutex;
  long error_index = total;
  std::exception_ptr error;

  auto worker = [&] {
    for (long task = next.fetch_add(1); task < total; task = next.fetch_add(1)) {
      const int snr_index = static_cast<int>(task / iterations);
      const int iteration = static_cast<int>(task % iterations);
      try {
        try {
          cells[static_cast<std::size_t>(task)] = run_cell(config, ctx, snr_index, iteration);
        } catch (const ConfigError& e) {
          throw ConfigError(cell_context(config, snr_index, iteration) + e.what());
        } catch (const std::exception& e) {
          throw NumericalError(cell_context(config, snr_index, iteration) + e.what());
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (task < error_index) {
          error_index = task;
          error = std::current_exception();
        }
        next.store(total);
      }
    }
  };

  const int thread_count = static_cast<int>(std::min<long>(options.workers, total));
  if (thread_count <= 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(static_cast<std::size_t>(thread_count));
    for (int t = 0; t < thread_count; ++t) threads.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  SweepResult result;
  result.seed = config.master_seed;
  result.config_fingerprint = fingerprint(config);
  result.points.reserve(static_cast<std::size_t>(points));
  for (int s = 0; s < points; ++s) {
    RunningStats com, base, gain;
    SweepPoint point;
    point.snr_db = config.snr_grid_db[static_cast<std::size_t>(s)];
    for (int i = 0; i < iterations; ++i) {
      const auto& cell = cells[static_cast<std::size_t>(static_cast<long>(s) * iterations + i)];
      com.add(cell.com);
      base.add(cell.baseline);
      gain.add(cell.com - cell.baseline);
      if (options.keep_samples) {
        point.com_samples.push_back(cell.com);
        point.baseline_samples.push_back(cell.baseline);
      }
    }
    point.mean_com = com.mean();
    point.std_com = com.stddev();
    point.mean_baseline = base.mean();
    point.std_baseline = base.stddev();
    point.mean_gain = gain.mean();
    point.std_gain = gain.stddev();
    point.iterations = iterations;
    result.points.push_back(std::move(point));
  }
  return result;
}

}  // namespace beamtrain
