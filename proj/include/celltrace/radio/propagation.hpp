#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace celltrace {

enum class PathLossVariant : std::uint8_t { MicroLOS, MicroNLOS, MacroNLOS };
std::string_view to_string(PathLossVariant v) noexcept;

inline constexpr double kUeHeightM = 1.5;

/// Path loss in dB; d in meters, f in GHz, heights in meters, log base 10.
/// Throws Error(NonPositiveInput) unless d, f (and heights for MicroLOS) > 0.
double path_loss_db(double d_m, double f_ghz, PathLossVariant v, double h_bs_m,
                    double h_ue_m = kUeHeightM);

/// Line-of-sight probability min(1, 18/d)(1 - e^(-d/36)) + e^(-d/36).
/// Throws Error(NonPositiveInput) for d <= 0.
double p_los(double d_m);

inline double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) noexcept { return 10.0 * std::log10(x); }

/// -174 dBm/Hz thermal density over `bandwidth_hz` plus the receiver noise
/// figure.
inline double thermal_noise_dbm(double bandwidth_hz, double noise_figure_db) noexcept {
  return -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

}  // namespace celltrace
