#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "beamtrain/config.hpp"

namespace beamtrain {

/// Running mean and sample standard deviation (Welford).
class RunningStats {
 public:
  void add(double value);
  int count() const { return count_; }
  double mean() const { return mean_; }
  /// Sample standard deviation (n - 1 denominator); 0 for fewer than 2 values.
  double stddev() const;

 private:
  int count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

struct SweepPoint {
  double snr_db = 0.0;
  double mean_com = 0.0;
  double std_com = 0.0;
  double mean_baseline = 0.0;
  double std_baseline = 0.0;
  double mean_gain = 0.0;   // mean of paired per-iteration differences
  double std_gain = 0.0;
  int iterations = 0;
  // Per-iteration capacities, kept only when SweepOptions::keep_samples.
  std::vector<double> com_samples;
  std::vector<double> baseline_samples;
};

struct SweepResult {
  std::vector<SweepPoint> points;  // ordered as the SNR grid
  std::uint64_t seed = 0;
  std::string config_fingerprint;
};

struct SweepOptions {
  int workers = 1;
  bool keep_samples = false;
};

/// Capacities of both methods on one (snr point, iteration) cell.
struct IterationOutcome {
  double com = 0.0;
  double baseline = 0.0;
  int baseline_rotation = 0;
};

/// One paired Monte Carlo draw: sample a channel, run the N training trials,
/// derive the COM and max-energy precoders from the same observations and
/// evaluate both. rho = 1 and sigma^2 = 10^(-snr_db/10).
IterationOutcome run_iteration(const SimConfig& config, int snr_index,
                               int iteration);

/// Runs the full grid. Every cell draws from its own derived stream and cells
/// are reduced in (snr, iteration) order, so the result does not depend on
/// `workers`. Errors are rethrown with the failing cell's coordinates; when
/// several cells fail the one with the lowest index is reported.
SweepResult run_sweep(const SimConfig& config, const SweepOptions& options = {});

}  // namespace beamtrain
