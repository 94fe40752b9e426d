#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace beamtrain {

/// Random stream used by every stochastic operation. Callers own their
/// stream; nothing in the library keeps global random state.
using Rng = std::mt19937_64;

/// Child stream for one (snr point, iteration) cell of a sweep. The seed is
/// a pure function of the three counters, so the stream does not depend on
/// which worker runs the cell or in which order.
Rng derive_stream(std::uint64_t master_seed, std::uint64_t snr_index,
                  std::uint64_t iteration);

/// Circularly-symmetric complex Gaussian sample with E|z|^2 = variance.
std::complex<double> complex_gaussian(Rng& rng, double variance);

Eigen::VectorXcd complex_gaussian_vector(Rng& rng, Eigen::Index size,
                                         double variance);

double uniform(Rng& rng, double lo, double hi);

}  // namespace beamtrain
