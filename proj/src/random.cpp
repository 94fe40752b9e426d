#include "beamtrain/random.hpp"

#include <cmath>

namespace beamtrain {

Rng derive_stream(std::uint64_t master_seed, std::uint64_t snr_index,
                  std::uint64_t iteration) {
  auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v); };
  auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  std::seed_seq seq{lo(master_seed), hi(master_seed), lo(snr_index),
                    hi(snr_index),   lo(iteration),   hi(iteration)};
  return Rng(seq);
}

std::complex<double> complex_gaussian(Rng& rng, double variance) {
  std::normal_distribution<double> normal(0.0, std::sqrt(variance / 2.0));
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

Eigen::VectorXcd complex_gaussian_vector(Rng& rng, Eigen::Index size,
                                         double variance) {
  Eigen::VectorXcd v(size);
  for (Eigen::Index i = 0; i < size; ++i) v(i) = complex_gaussian(rng, variance);
  return v;
}

double uniform(Rng& rng, double lo, double hi) {
  if (lo == hi) return lo;
  return lo + (hi - lo) * std::generate_canonical<double, 53>(rng);
}

}  // namespace beamtrain
