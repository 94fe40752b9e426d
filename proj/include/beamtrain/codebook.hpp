#pragma once

#include <vector>

#include <Eigen/Dense>

namespace beamtrain {

/// N orthonormal constant-modulus AWVs of length M, stored as the columns
/// of an M x N matrix.
class Codebook {
 public:
  explicit Codebook(Eigen::MatrixXcd codewords);

  int size() const { return static_cast<int>(codewords_.cols()); }
  int length() const { return static_cast<int>(codewords_.rows()); }

  /// Codeword `index`, 0-based.
  auto codeword(int index) const { return codewords_.col(index); }
  const Eigen::MatrixXcd& matrix() const { return codewords_; }

 private:
  Eigen::MatrixXcd codewords_;
};

/// First N columns of the M-point DFT matrix scaled by 1/sqrt(M):
///   entry (m, n) = exp(-j 2 pi m n / M) / sqrt(M).
/// Throws ConfigError unless 1 <= N <= M.
Codebook make_codebook(int count, int length);

/// Which codeword each subarray transmits under cyclic rotation k.
/// Indices are 0-based: subarray n uses codeword (n - k) mod N, so at k = 1
/// subarray 0 carries the last codeword and subarray 1 carries the first.
struct RotationAssignment {
  int rotation = 0;
  std::vector<int> codeword_of_subarray;

  int size() const { return static_cast<int>(codeword_of_subarray.size()); }
};

RotationAssignment rotate(int count, int rotation);

/// Block-diagonal NM x N analog precoder. Column n is zero outside rows
/// [nM, (n+1)M).
struct AnalogPrecoder {
  Eigen::MatrixXcd entries;

  int streams() const { return static_cast<int>(entries.cols()); }
};

AnalogPrecoder assemble_precoder(const Codebook& codebook,
                                 const RotationAssignment& assignment);

/// Places arbitrary per-subarray weight vectors (columns of an M x N matrix)
/// on the block diagonal.
AnalogPrecoder block_diagonal(const Eigen::MatrixXcd& subarray_weights);

}  // namespace beamtrain
