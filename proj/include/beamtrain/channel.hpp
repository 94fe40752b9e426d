#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "beamtrain/random.hpp"

namespace beamtrain {

/// Closed angular interval in radians.
struct AngleRange {
  double lo = 0.0;
  double hi = 0.0;

  bool operator==(const AngleRange&) const = default;
};

/// One propagation path of the geometric Saleh-Valenzuela model.
struct PathParams {
  std::complex<double> gain;
  double aod_azimuth = 0.0;
  double aoa_azimuth = 0.0;
  // Elevations are drawn and kept but a ULA only resolves azimuth.
  double aod_elevation = 0.0;
  double aoa_elevation = 0.0;

  bool operator==(const PathParams&) const = default;
};

struct PathSet {
  std::vector<PathParams> paths;

  std::size_t size() const { return paths.size(); }
  bool operator==(const PathSet&) const = default;
};

struct ArrayGeometry {
  int element_count = 1;
  double spacing_over_wavelength = 0.5;
};

/// N_r x N_t narrowband channel.
using ChannelMatrix = Eigen::MatrixXcd;

/// Array response of a uniform linear array:
///   f(phi)[u] = exp(j 2 pi (d/lambda) u sin(phi)) / sqrt(U),  u = 0..U-1.
Eigen::VectorXcd ula_response(double phi, const ArrayGeometry& geometry);

/// Draws `count` paths. Azimuths are uniform on the given ranges, elevations
/// uniform on [-pi/2, pi/2], gains are CN(0, 1). Draw order per path is
/// aod, aoa, aod elevation, aoa elevation, gain.
PathSet sample_paths(Rng& rng, int count, const AngleRange& aod_range,
                     const AngleRange& aoa_range);

/// H = sqrt(N_r N_t / L) * sum_l gain_l f_r(aoa_l) f_t(aod_l)^H with unit
/// antenna element gains inside the sampled angular ranges.
ChannelMatrix assemble_channel(const PathSet& paths, int rx_antennas,
                               int tx_antennas,
                               double spacing_over_wavelength = 0.5);

/// Number of singular values above `relative_tolerance` times the largest.
int numerical_rank(const Eigen::MatrixXcd& matrix,
                   double relative_tolerance = 1e-9);

}  // namespace beamtrain
