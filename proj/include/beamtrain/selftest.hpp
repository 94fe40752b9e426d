#pragma once

#include <string>
#include <vector>

namespace beamtrain {

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Quick invariant checks over the library (codebook orthonormality, array
/// response norms, combiner orthonormality, weight normalization, one-hot
/// recovery, capacity monotonicity, channel rank, sweep determinism).
std::vector<SelftestCheck> run_selftest();

}  // namespace beamtrain
