#pragma once

#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "beamtrain/codebook.hpp"
#include "beamtrain/transceiver.hpp"

namespace beamtrain {

/// How the energy-weighted AWV estimates are scaled before use.
///  - kRaw: untouched convex combination of codewords (norm <= 1).
///  - kUnitNorm: each subarray vector scaled to unit l2 norm.
///  - kUnitModulus: each entry projected to modulus 1/sqrt(M), phase kept.
enum class NormalizationMode { kRaw, kUnitNorm, kUnitModulus };

/// w_n = |y_n|^2 / sum_m |y_m|^2.
struct TrialWeights {
  std::vector<double> weights;
};

/// Throws DegenerateObservationError if every column of Y is zero.
TrialWeights compute_weights(const ObservationSet& obs);

struct EstimatedAwvs {
  Eigen::MatrixXcd vectors;  // M x N, column k is subarray k's AWV
  NormalizationMode mode = NormalizationMode::kUnitNorm;

  AnalogPrecoder precoder() const { return block_diagonal(vectors); }
};

/// Energy-weighted combination estimator. For subarray k:
///
///   a_k^est = sum_i w_i * a_{(k - i) mod N}
///
/// where (k - i) mod N is the codeword subarray k transmitted during trial i
/// (rotation i). One-hot weights therefore return exactly the rotation that
/// produced the energy. Cost is O(N^2 M).
EstimatedAwvs com_estimate(const ObservationSet& obs, const Codebook& codebook,
                           NormalizationMode mode);

/// Same estimator, starting from precomputed weights.
EstimatedAwvs com_estimate(const TrialWeights& weights,
                           const Codebook& codebook, NormalizationMode mode);

struct BaselineChoice {
  int rotation = 0;
  AnalogPrecoder precoder;
};

/// 802.11ad/ay style selection: the rotation whose trial received the most
/// energy. Ties go to the smallest trial index, so all-zero Y picks rotation 0.
BaselineChoice baseline_select(const ObservationSet& obs,
                               const Codebook& codebook);

/// Location of one training trial inside the BRP-TX TRN field.
struct TrnSlot {
  int unit = 0;      // 0-based TRN-Unit
  int subfield = 0;  // 0-based index among the unit's T_M switching subfields
};

/// Trials packed into TRN-Units. T_N is fixed at 1 and the T_P leading
/// subfields of each unit carry the data AWV only.
struct TrnSchedule {
  int t_p = 0;
  int t_m = 1;
  int t_n = 1;
  int units = 0;
  std::vector<TrnSlot> slots;  // indexed by trial

  /// Number of trials placed in `unit`.
  int trials_in_unit(int unit) const;
  /// Subfield position of a trial counting the T_P leading subfields.
  int absolute_subfield(int trial) const;
};

TrnSchedule trn_schedule(int trials, int t_p, int t_m);

NormalizationMode parse_normalization(std::string_view text);
std::string_view to_string(NormalizationMode mode);

}  // namespace beamtrain
