#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "beamtrain/channel.hpp"
#include "beamtrain/training.hpp"
#include "beamtrain/transceiver.hpp"

namespace beamtrain {

/// Simulation configuration. Defaults reproduce the reference scenario:
/// 8 subarrays of 8 antennas at the transmitter, 16 receive antennas on 4 RF
/// chains, 3 paths, half-wavelength spacing, AoD in [-pi/6, pi/6] and AoA in
/// [-pi, pi].
struct SimConfig {
  int streams = 8;             // N, RF chains = subarrays at Tx
  int subarray_size = 8;       // M
  int rx_antennas = 16;        // N_r
  int rx_chains = 4;           // K
  int paths = 3;               // L
  double d_over_lambda = 0.5;
  AngleRange aod_range{-std::numbers::pi / 6, std::numbers::pi / 6};
  AngleRange aoa_range{-std::numbers::pi, std::numbers::pi};
  std::vector<double> snr_grid_db{0.0, 5.0, 10.0, 15.0, 20.0};
  int mc_iterations = 500;
  std::uint64_t master_seed = 1;
  SignalMode signal_mode = SignalMode::kGaussian;
  NormalizationMode normalization_mode = NormalizationMode::kUnitNorm;
  int trn_t_p = 0;
  int trn_t_m = 8;

  int tx_antennas() const { return streams * subarray_size; }  // N_t

  bool operator==(const SimConfig&) const = default;
};

/// Throws ConfigError naming the offending field.
void validate(const SimConfig& config);

/// Ordered `key = value` overrides, e.g. from command-line flags.
using ConfigOverrides = std::vector<std::pair<std::string, std::string>>;

/// Reads the flat `key = value` file (if given), applies `overrides` on top
/// and validates the result. Lines starting with '#' are comments. Unknown
/// keys are rejected. Angle values accept plain radians or multiples of pi
/// such as `-pi/6`. The SNR grid is either `snr_grid = 0, 5, 10` or the
/// triple snr_min / snr_max / snr_step; whichever source is applied last wins.
SimConfig load_config(const std::optional<std::string>& path,
                      const ConfigOverrides& overrides = {});

/// Parses configuration text directly; `source` names it in error messages.
SimConfig parse_config(const std::string& text, const ConfigOverrides& overrides = {},
                       const std::string& source = "<config>");

/// Canonical text form; parse_config(to_text(c)) == c.
std::string to_text(const SimConfig& config);

/// 16 hex digit FNV-1a hash of to_text(config).
std::string fingerprint(const SimConfig& config);

/// Inclusive grid min, min + step, ... up to max.
std::vector<double> snr_grid(double min_db, double max_db, double step_db);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

}  // namespace beamtrain
