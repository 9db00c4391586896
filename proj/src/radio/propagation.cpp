#include "celltrace/radio/propagation.hpp"

#include <algorithm>

#include "celltrace/core/error.hpp"

namespace celltrace {

std::string_view to_string(PathLossVariant v) noexcept {
  switch (v) {
    case PathLossVariant::MicroLOS: return "micro_los";
    case PathLossVariant::MicroNLOS: return "micro_nlos";
    case PathLossVariant::MacroNLOS: return "macro_nlos";
  }
  return "?";
}

double path_loss_db(double d_m, double f_ghz, PathLossVariant v, double h_bs_m, double h_ue_m) {
  if (!(d_m > 0.0) || !(f_ghz > 0.0))
    throw Error(ErrorCode::NonPositiveInput, "path loss needs positive distance and frequency");
  switch (v) {
    case PathLossVariant::MicroLOS:
      if (!(h_bs_m > 0.0) || !(h_ue_m > 0.0))
        throw Error(ErrorCode::NonPositiveInput, "path loss needs positive antenna heights");
      return 40.0 * std::log10(d_m) + 7.8 - 18.0 * std::log10(h_bs_m) -
             18.0 * std::log10(h_ue_m) + 2.0 * std::log10(f_ghz);
    case PathLossVariant::MicroNLOS:
      return 36.7 * std::log10(d_m) + 22.7 + 26.0 * std::log10(f_ghz);
    case PathLossVariant::MacroNLOS:
      return 22.0 * std::log10(d_m) + 28.0 + 20.0 * std::log10(f_ghz);
  }
  return 0.0;
}

double p_los(double d_m) {
  if (!(d_m > 0.0)) throw Error(ErrorCode::NonPositiveInput, "LOS probability needs d > 0");
  if (d_m <= 18.0) return 1.0;
  const double e = std::exp(-d_m / 36.0);
  return std::min(1.0, 18.0 / d_m) * (1.0 - e) + e;
}

}  // namespace celltrace
