#include "beamtrain/transceiver.hpp"

#include <cmath>
#include <string>

#include "beamtrain/errors.hpp"

namespace beamtrain {

namespace {

std::string shape(const Eigen::MatrixXcd& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Combiner omni_combiner(int rx_antennas, int chains) {
  if (rx_antennas < 1 || chains < 1)
    throw ConfigError("omni_combiner: N_r and K must be >= 1");
  if (rx_antennas % chains != 0)
    throw ConfigError("omni_combiner: K = " + std::to_string(chains) +
                      " does not divide N_r = " + std::to_string(rx_antennas));

  const int block = rx_antennas / chains;
  const double value = 1.0 / std::sqrt(static_cast<double>(block));
  Combiner combiner;
  combiner.analog = Eigen::MatrixXcd::Zero(chains, rx_antennas);
  for (int k = 0; k < chains; ++k)
    combiner.analog.block(k, k * block, 1, block).setConstant(value);
  combiner.digital = Eigen::VectorXcd::Ones(chains);
  return combiner;
}

SignalMode parse_signal_mode(std::string_view text) {
  if (text == "gaussian") return SignalMode::kGaussian;
  if (text == "pilot") return SignalMode::kPilot;
  throw ConfigError("signal_mode: expected gaussian or pilot, got '" +
                    std::string(text) + "'");
}

std::string_view to_string(SignalMode mode) {
  return mode == SignalMode::kPilot ? "pilot" : "gaussian";
}

Eigen::VectorXcd draw_signal(Rng& rng, int streams, SignalMode mode) {
  const double power = 1.0 / static_cast<double>(streams);
  if (mode == SignalMode::kPilot)
    return Eigen::VectorXcd::Constant(streams, std::sqrt(power));
  return complex_gaussian_vector(rng, streams, power);
}

Eigen::VectorXcd synthesize_rx(const ChannelMatrix& h,
                               const AnalogPrecoder& precoder,
                               const Eigen::VectorXcd& digital_precoder,
                               const Eigen::MatrixXcd& combiner,
                               const Eigen::VectorXcd& signal,
                               const Eigen::VectorXcd& noise, double rho) {
  const auto& a = precoder.entries;
  if (combiner.cols() != h.rows() || h.cols() != a.rows() ||
      a.cols() != digital_precoder.size() ||
      digital_precoder.size() != signal.size() || noise.size() != h.rows()) {
    throw ConfigError("synthesize_rx: inconsistent dimensions (W " +
                      shape(combiner) + ", H " + shape(h) + ", A " + shape(a) +
                      ", D " + std::to_string(digital_precoder.size()) +
                      ", s " + std::to_string(signal.size()) + ", n " +
                      std::to_string(noise.size()) + ")");
  }
  if (!(rho >= 0.0)) throw ConfigError("synthesize_rx: rho must be >= 0");

  const Eigen::VectorXcd transmitted =
      a * digital_precoder.cwiseProduct(signal);
  return std::sqrt(rho) * (combiner * (h * transmitted)) + combiner * noise;
}

ObservationSet run_training_trials(const ChannelMatrix& h,
                                   const Codebook& codebook,
                                   const Eigen::MatrixXcd& combiner,
                                   double rho, double sigma2, Rng& rng,
                                   SignalMode mode) {
  if (!(sigma2 >= 0.0))
    throw ConfigError("run_training_trials: sigma2 must be >= 0");

  const int trials = codebook.size();
  const Eigen::VectorXcd identity = Eigen::VectorXcd::Ones(trials);

  ObservationSet obs;
  obs.columns.resize(combiner.rows(), trials);
  obs.rotations.reserve(static_cast<std::size_t>(trials));
  for (int n = 0; n < trials; ++n) {
    const AnalogPrecoder a = assemble_precoder(codebook, rotate(trials, n));
    const Eigen::VectorXcd s = draw_signal(rng, trials, mode);
    const Eigen::VectorXcd noise = complex_gaussian_vector(rng, h.rows(), sigma2);
    obs.columns.col(n) = synthesize_rx(h, a, identity, combiner, s, noise, rho);
    obs.rotations.push_back(n);
  }
  return obs;
}

}  // namespace beamtrain
