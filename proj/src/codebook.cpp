#include "beamtrain/codebook.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "beamtrain/errors.hpp"

namespace beamtrain {

Codebook::Codebook(Eigen::MatrixXcd codewords) : codewords_(std::move(codewords)) {
  if (codewords_.cols() < 1 || codewords_.rows() < 1)
    throw ConfigError("Codebook: needs at least one codeword of length >= 1");
}

Codebook make_codebook(int count, int length) {
  if (count < 1 || length < 1)
    throw ConfigError("make_codebook: N and M must be >= 1");
  if (count > length)
    throw ConfigError("make_codebook: N = " + std::to_string(count) +
                      " exceeds M = " + std::to_string(length) +
                      "; constant-modulus orthonormal codewords need N <= M");

  const double scale = 1.0 / std::sqrt(static_cast<double>(length));
  Eigen::MatrixXcd words(length, count);
  for (int n = 0; n < count; ++n) {
    for (int m = 0; m < length; ++m) {
      // Reduce m*n mod M first so the phase stays exact for large products.
      const int k = (m * n) % length;
      const double phase = -2.0 * std::numbers::pi * k / length;
      words(m, n) = std::polar(scale, phase);
    }
  }
  return Codebook(std::move(words));
}

RotationAssignment rotate(int count, int rotation) {
  if (count < 1) throw ConfigError("rotate: N must be >= 1");
  if (rotation < 0 || rotation >= count)
    throw ConfigError("rotate: rotation index " + std::to_string(rotation) +
                      " outside [0, " + std::to_string(count - 1) + "]");

  RotationAssignment assignment;
  assignment.rotation = rotation;
  assignment.codeword_of_subarray.resize(static_cast<std::size_t>(count));
  for (int n = 0; n < count; ++n)
    assignment.codeword_of_subarray[static_cast<std::size_t>(n)] =
        ((n - rotation) % count + count) % count;
  return assignment;
}

AnalogPrecoder assemble_precoder(const Codebook& codebook,
                                 const RotationAssignment& assignment) {
  if (assignment.size() != codebook.size())
    throw ConfigError("assemble_precoder: assignment covers " +
                      std::to_string(assignment.size()) +
                      " subarrays but codebook has " +
                      std::to_string(codebook.size()) + " codewords");

  Eigen::MatrixXcd weights(codebook.length(), codebook.size());
  for (int n = 0; n < codebook.size(); ++n) {
    const int word = assignment.codeword_of_subarray[static_cast<std::size_t>(n)];
    if (word < 0 || word >= codebook.size())
      throw ConfigError("assemble_precoder: codeword index out of range");
    weights.col(n) = codebook.codeword(word);
  }
  return block_diagonal(weights);
}

AnalogPrecoder block_diagonal(const Eigen::MatrixXcd& subarray_weights) {
  const Eigen::Index m = subarray_weights.rows();
  const Eigen::Index n = subarray_weights.cols();
  AnalogPrecoder precoder{Eigen::MatrixXcd::Zero(n * m, n)};
  for (Eigen::Index i = 0; i < n; ++i)
    precoder.entries.block(i * m, i, m, 1) = subarray_weights.col(i);
  return precoder;
}

}  // namespace beamtrain
