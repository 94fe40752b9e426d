#include "beamtrain/training.hpp"

#include <cmath>
#include <string>

#include "beamtrain/errors.hpp"

namespace beamtrain {

TrialWeights compute_weights(const ObservationSet& obs) {
  const int trials = obs.trials();
  if (trials < 1) throw ConfigError("compute_weights: no observations");

  TrialWeights out;
  out.weights.resize(static_cast<std::size_t>(trials));
  double total = 0.0;
  for (int n = 0; n < trials; ++n) {
    const double energy = obs.columns.col(n).squaredNorm();
    if (!std::isfinite(energy))
      throw NumericalError("compute_weights: non-finite received energy");
    out.weights[static_cast<std::size_t>(n)] = energy;
    total += energy;
  }
  if (!(total > 0.0))
    throw DegenerateObservationError(
        "compute_weights: all training trials received zero energy");
  for (auto& w : out.weights) w /= total;
  return out;
}

EstimatedAwvs com_estimate(const ObservationSet& obs, const Codebook& codebook,
                           NormalizationMode mode) {
  return com_estimate(compute_weights(obs), codebook, mode);
}

EstimatedAwvs com_estimate(const TrialWeights& weights,
                           const Codebook& codebook, NormalizationMode mode) {
  const int count = codebook.size();
  if (static_cast<int>(weights.weights.size()) != count)
    throw ConfigError("com_estimate: " + std::to_string(weights.weights.size()) +
                      " trials but codebook has " + std::to_string(count) +
                      " codewords");

  EstimatedAwvs est;
  est.mode = mode;
  est.vectors = Eigen::MatrixXcd::Zero(codebook.length(), count);
  for (int k = 0; k < count; ++k) {
    for (int i = 0; i < count; ++i) {
      const int word = ((k - i) % count + count) % count;
      est.vectors.col(k) += weights.weights[static_cast<std::size_t>(i)] *
                            codebook.codeword(word);
    }
  }

  const double modulus = 1.0 / std::sqrt(static_cast<double>(codebook.length()));
  for (int k = 0; k < count; ++k) {
    auto v = est.vectors.col(k);
    switch (mode) {
      case NormalizationMode::kRaw:
        break;
      case NormalizationMode::kUnitNorm: {
        const double norm = v.norm();
        if (!(norm > 0.0))
          throw NumericalError("com_estimate: subarray " + std::to_string(k) +
                               " estimate vanished; cannot normalize");
        v /= norm;
        break;
      }
      case NormalizationMode::kUnitModulus:
        // Zero entries have no phase; arg(0) = 0 maps them to +1/sqrt(M).
        for (Eigen::Index m = 0; m < v.size(); ++m)
          v(m) = std::polar(modulus, std::arg(v(m)));
        break;
    }
  }
  return est;
}

BaselineChoice baseline_select(const ObservationSet& obs,
                               const Codebook& codebook) {
  const int trials = obs.trials();
  if (trials < 1) throw ConfigError("baseline_select: no observations");
  if (trials != codebook.size())
    throw ConfigError("baseline_select: trial count does not match codebook");

  int best = 0;
  double best_energy = obs.columns.col(0).squaredNorm();
  for (int n = 1; n < trials; ++n) {
    const double energy = obs.columns.col(n).squaredNorm();
    if (energy > best_energy) {
      best = n;
      best_energy = energy;
    }
  }
  const int rotation = obs.rotations.empty()
                           ? best
                           : obs.rotations[static_cast<std::size_t>(best)];
  return {rotation, assemble_precoder(codebook, rotate(trials, rotation))};
}

int TrnSchedule::trials_in_unit(int unit) const {
  int n = 0;
  for (const auto& slot : slots)
    if (slot.unit == unit) ++n;
  return n;
}

int TrnSchedule::absolute_subfield(int trial) const {
  return t_p + slots.at(static_cast<std::size_t>(trial)).subfield;
}

TrnSchedule trn_schedule(int trials, int t_p, int t_m) {
  if (t_m < 1) throw ConfigError("trn_schedule: T_M must be >= 1");
  if (t_p < 0) throw ConfigError("trn_schedule: T_P must be >= 0");
  if (trials < 0) throw ConfigError("trn_schedule: trial count must be >= 0");

  TrnSchedule schedule;
  schedule.t_p = t_p;
  schedule.t_m = t_m;
  schedule.t_n = 1;
  schedule.units = (trials + t_m - 1) / t_m;
  schedule.slots.reserve(static_cast<std::size_t>(trials));
  for (int n = 0; n < trials; ++n) schedule.slots.push_back({n / t_m, n % t_m});
  return schedule;
}

NormalizationMode parse_normalization(std::string_view text) {
  if (text == "raw") return NormalizationMode::kRaw;
  if (text == "unit-norm") return NormalizationMode::kUnitNorm;
  if (text == "unit-modulus") return NormalizationMode::kUnitModulus;
  throw ConfigError("normalization_mode: expected raw, unit-norm or "
                    "unit-modulus, got '" + std::string(text) + "'");
}

std::string_view to_string(NormalizationMode mode) {
  switch (mode) {
    case NormalizationMode::kRaw: return "raw";
    case NormalizationMode::kUnitNorm: return "unit-norm";
    case NormalizationMode::kUnitModulus: return "unit-modulus";
  }
  return "unknown";
}

}  // namespace beamtrain
