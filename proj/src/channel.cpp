#include "beamtrain/channel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "beamtrain/errors.hpp"

namespace beamtrain {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void check_range(const AngleRange& range, const char* name) {
  if (!std::isfinite(range.lo) || !std::isfinite(range.hi))
    throw ConfigError(std::string(name) + ": bounds must be finite");
  if (range.lo > range.hi)
    throw ConfigError(std::string(name) + ": lower bound exceeds upper bound");
}

}  // namespace

Eigen::VectorXcd ula_response(double phi, const ArrayGeometry& geometry) {
  const int count = geometry.element_count;
  if (count < 1) throw ConfigError("ula_response: element_count must be >= 1");
  if (!(geometry.spacing_over_wavelength > 0.0))
    throw ConfigError("ula_response: spacing_over_wavelength must be > 0");

  const double step =
      2.0 * std::numbers::pi * geometry.spacing_over_wavelength * std::sin(phi);
  const double scale = 1.0 / std::sqrt(static_cast<double>(count));
  Eigen::VectorXcd response(count);
  for (int u = 0; u < count; ++u)
    response(u) = std::polar(scale, step * static_cast<double>(u));
  return response;
}

PathSet sample_paths(Rng& rng, int count, const AngleRange& aod_range,
                     const AngleRange& aoa_range) {
  if (count < 1) throw ConfigError("sample_paths: path count must be >= 1");
  check_range(aod_range, "aod_range");
  check_range(aoa_range, "aoa_range");

  PathSet set;
  set.paths.reserve(static_cast<std::size_t>(count));
  for (int l = 0; l < count; ++l) {
    PathParams path;
    path.aod_azimuth = uniform(rng, aod_range.lo, aod_range.hi);
    path.aoa_azimuth = uniform(rng, aoa_range.lo, aoa_range.hi);
    path.aod_elevation = uniform(rng, -kHalfPi, kHalfPi);
    path.aoa_elevation = uniform(rng, -kHalfPi, kHalfPi);
    path.gain = complex_gaussian(rng, 1.0);
    set.paths.push_back(path);
  }
  return set;
}

ChannelMatrix assemble_channel(const PathSet& paths, int rx_antennas,
                               int tx_antennas,
                               double spacing_over_wavelength) {
  if (rx_antennas < 1 || tx_antennas < 1)
    throw ConfigError("assemble_channel: antenna counts must be >= 1");
  if (paths.paths.empty())
    throw ConfigError("assemble_channel: path set is empty");

  const ArrayGeometry rx{rx_antennas, spacing_over_wavelength};
  const ArrayGeometry tx{tx_antennas, spacing_over_wavelength};
  const double gamma = std::sqrt(static_cast<double>(rx_antennas) *
                                 tx_antennas /
                                 static_cast<double>(paths.size()));

  ChannelMatrix h = ChannelMatrix::Zero(rx_antennas, tx_antennas);
  for (const auto& path : paths.paths) {
    h.noalias() += path.gain * ula_response(path.aoa_azimuth, rx) *
                   ula_response(path.aod_azimuth, tx).adjoint();
  }
  h *= gamma;
  return h;
}

int numerical_rank(const Eigen::MatrixXcd& matrix, double relative_tolerance) {
  if (matrix.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(matrix);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cutoff = relative_tolerance * sv(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return rank;
}

}  // namespace beamtrain
