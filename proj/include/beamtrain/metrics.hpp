#pragma once

#include <Eigen/Dense>

#include "beamtrain/channel.hpp"
#include "beamtrain/codebook.hpp"

namespace beamtrain {

struct CapacityInput {
  Eigen::MatrixXcd combiner;   // W, K x N_r
  ChannelMatrix channel;       // H, N_r x NM
  Eigen::MatrixXcd precoder;   // P = A D, NM x N
  double rho = 1.0;
  double sigma2 = 1.0;
  int streams = 1;             // N
};

struct CapacityResult {
  double bits_per_s_per_hz = 0.0;
};

/// Effective channel capacity in bit/s/Hz:
///
///   C = log2 det(I_K + (rho/N) R_n^{-1} (W H P)(W H P)^H),  R_n = sigma2 W W^H.
///
/// Evaluated on the whitened Hermitian form with a Cholesky factor, so the
/// result stays accurate at high SNR. Throws CombinerRankError when W W^H is
/// singular and ConfigError on inconsistent dimensions.
CapacityResult capacity(const CapacityInput& input);

/// Capacity of a trained analog precoder with D = I.
CapacityResult evaluate_method(const ChannelMatrix& h,
                               const AnalogPrecoder& chosen,
                               const Eigen::MatrixXcd& combiner, double rho,
                               double sigma2);

}  // namespace beamtrain
