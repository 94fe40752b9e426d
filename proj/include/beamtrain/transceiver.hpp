#pragma once

#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "beamtrain/channel.hpp"
#include "beamtrain/codebook.hpp"
#include "beamtrain/random.hpp"

namespace beamtrain {

/// Receive combiner W = D_bar * A_bar. A_bar is K x N_r block diagonal with
/// 1 x (N_r/K) row blocks; D_bar is a K x K diagonal.
struct Combiner {
  Eigen::MatrixXcd analog;
  Eigen::VectorXcd digital;

  Eigen::MatrixXcd combined() const { return digital.asDiagonal() * analog; }
  int chains() const { return static_cast<int>(analog.rows()); }
};

/// Omni-directional receive pattern used during transmit training: D_bar = I
/// and every row block is (1/sqrt(N_r/K)) [1, ..., 1]. Rows of W are
/// orthonormal. Throws ConfigError unless K divides N_r.
Combiner omni_combiner(int rx_antennas, int chains);

enum class SignalMode { kGaussian, kPilot };

SignalMode parse_signal_mode(std::string_view text);
std::string_view to_string(SignalMode mode);

/// Gaussian mode draws i.i.d. CN(0, 1/N) symbols; pilot mode returns
/// (1/sqrt(N)) [1, ..., 1] without touching the stream.
Eigen::VectorXcd draw_signal(Rng& rng, int streams, SignalMode mode);

/// y = sqrt(rho) W H A D s + W n.
Eigen::VectorXcd synthesize_rx(const ChannelMatrix& h,
                               const AnalogPrecoder& precoder,
                               const Eigen::VectorXcd& digital_precoder,
                               const Eigen::MatrixXcd& combiner,
                               const Eigen::VectorXcd& signal,
                               const Eigen::VectorXcd& noise, double rho);

/// Received vectors of the N cyclic-rotation trials, one column per trial.
struct ObservationSet {
  Eigen::MatrixXcd columns;     // K x N
  std::vector<int> rotations;   // rotation used for each column

  int trials() const { return static_cast<int>(columns.cols()); }
};

/// Runs the N transmit-training trials. Trial n (0-based) uses rotation n
/// with D = I; each trial draws its signal and then its N_r noise samples
/// (variance sigma2 per entry) from `rng`, in that order.
ObservationSet run_training_trials(const ChannelMatrix& h,
                                   const Codebook& codebook,
                                   const Eigen::MatrixXcd& combiner,
                                   double rho, double sigma2, Rng& rng,
                                   SignalMode mode);

}  // namespace beamtrain
