// Command-line front end: `simulate` runs a seeded SNR sweep comparing the
// energy-weighted COM estimator with 802.11ad/ay max-energy selection;
// `selftest` runs the built-in invariant checks.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "beamtrain/config.hpp"
#include "beamtrain/errors.hpp"
#include "beamtrain/report.hpp"
#include "beamtrain/selftest.hpp"
#include "beamtrain/sweep.hpp"
#include "beamtrain/training.hpp"

namespace {

enum ExitCode { kOk = 0, kConfigError = 1, kRuntimeError = 2, kIoError = 3 };

struct SimulateArgs {
  std::string config_path;
  std::optional<double> snr_min, snr_max, snr_step;
  std::optional<int> mc;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> mode, norm;
  std::vector<std::string> sets;
  std::string out;
  std::string plot;
  int workers = 1;
};

beamtrain::ConfigOverrides collect_overrides(const SimulateArgs& args) {
  using beamtrain::format_double;
  beamtrain::ConfigOverrides overrides;
  for (const auto& item : args.sets) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw beamtrain::ConfigError("--set: expected KEY=VALUE, got '" + item + "'");
    overrides.emplace_back(item.substr(0, eq), item.substr(eq + 1));
  }
  if (args.snr_min) overrides.emplace_back("snr_min", format_double(*args.snr_min));
  if (args.snr_max) overrides.emplace_back("snr_max", format_double(*args.snr_max));
  if (args.snr_step) overrides.emplace_back("snr_step", format_double(*args.snr_step));
  if (args.mc) overrides.emplace_back("mc_iterations", std::to_string(*args.mc));
  if (args.seed) overrides.emplace_back("seed", std::to_string(*args.seed));
  if (args.mode) overrides.emplace_back("signal_mode", *args.mode);
  if (args.norm) overrides.emplace_back("normalization_mode", *args.norm);
  return overrides;
}

int simulate(const SimulateArgs& args) {
  using namespace beamtrain;
  std::optional<std::string> path;
  if (!args.config_path.empty()) path = args.config_path;
  const SimConfig config = load_config(path, collect_overrides(args));

  const TrnSchedule schedule = trn_schedule(config.streams, config.trn_t_p, config.trn_t_m);
  std::cerr << "config " << fingerprint(config) << ": N=" << config.streams
            << " M=" << config.subarray_size << " N_t=" << config.tx_antennas()
            << " N_r=" << config.rx_antennas << " K=" << config.rx_chains
            << " L=" << config.paths << ", " << config.mc_iterations
            << " iterations x " << config.snr_grid_db.size() << " SNR points, "
            << schedule.slots.size() << " trials in " << schedule.units
            << " TRN-Unit(s)\n";

  const SweepResult result = run_sweep(config, {args.workers, false});
  if (args.out.empty()) {
    std::cout << csv_text(result);
  } else {
    emit_csv(result, args.out);
  }
  if (!args.plot.empty()) emit_plot(result, args.plot);
  return kOk;
}

int selftest() {
  int failures = 0;
  for (const auto& c : beamtrain::run_selftest()) {
    std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name;
    if (!c.passed) {
      std::cout << "  (" << c.detail << ")";
      ++failures;
    }
    std::cout << "\n";
  }
  return failures == 0 ? kOk : kRuntimeError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transmit beam training simulator for sub-connected hybrid mmWave MIMO"};
  app.require_subcommand(1);

  SimulateArgs args;
  auto* sim = app.add_subcommand("simulate", "Run a Monte Carlo SNR sweep");
  sim->add_option("--config", args.config_path, "key = value configuration file");
  sim->add_option("--snr-min", args.snr_min, "First SNR point (dB)");
  sim->add_option("--snr-max", args.snr_max, "Last SNR point (dB)");
  sim->add_option("--snr-step", args.snr_step, "SNR step (dB)");
  sim->add_option("--mc", args.mc, "Monte Carlo iterations per SNR point");
  sim->add_option("--seed", args.seed, "Master seed");
  sim->add_option("--mode", args.mode, "Training signal: gaussian | pilot");
  sim->add_option("--norm", args.norm, "COM normalization: raw | unit-norm | unit-modulus");
  sim->add_option("--set", args.sets, "Override any config key (KEY=VALUE, repeatable)");
  sim->add_option("--out", args.out, "CSV output path (stdout if omitted)");
  sim->add_option("--plot", args.plot, "SVG plot output path");
  sim->add_option("--workers", args.workers, "Worker threads")->check(CLI::PositiveNumber);

  auto* self = app.add_subcommand("selftest", "Run the invariant checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*sim) return simulate(args);
    if (*self) return selftest();
  } catch (const beamtrain::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfigError;
  } catch (const beamtrain::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
  return kOk;
}
