#pragma once

#include <stdexcept>
#include <string>

namespace beamtrain {

/// Invalid dimensions, ranges or parameter combinations.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical failure during a simulation (degenerate observations, singular
/// combiner, non-finite values).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every training trial received zero energy, so trial weights are undefined.
class DegenerateObservationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// R_n = sigma^2 W W^H is not invertible.
class CombinerRankError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace beamtrain
