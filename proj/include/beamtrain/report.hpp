#pragma once

#include <string>

#include "beamtrain/sweep.hpp"

namespace beamtrain {

inline constexpr const char* kCsvHeader =
    "snr_db,mean_com,std_com,mean_11ad,std_11ad,mean_gain,iters,seed";

/// CSV rendering of a sweep: the fixed header and one row per SNR point,
/// reals in shortest round-trip form.
std::string csv_text(const SweepResult& result);

/// Writes csv_text(result) to `path`. Throws IoError naming the path.
void emit_csv(const SweepResult& result, const std::string& path);

/// Capacity versus SNR for both methods as a standalone SVG document.
std::string plot_svg(const SweepResult& result);

void emit_plot(const SweepResult& result, const std::string& path);

}  // namespace beamtrain
