#pragma once

#include <span>
#include <vector>

#include "celltrace/demand/demand_matrix.hpp"
#include "celltrace/radio/peak.hpp"

namespace celltrace {

struct Projection {
  double horizon_years = 4.0;
  double cagr_mobile = 0.61;
  double cagr_static = 0.57;
  double cagr_combined = 0.59;
  /// Fold today's 3G peak demand, grown at the same rates, into LTE.
  bool include_3g = true;

  /// Throws Error(ConfigError) for rates <= -1 or a negative horizon.
  void validate() const;
  /// (1 + rate)^horizon for the class; Unknown uses the combined rate.
  double factor(MobilityClass m) const;
};

/// Projected LTE demand (bit/s) per location. With `use_mobility`, mobile
/// and static demand grow at their own rates; otherwise everything grows
/// at the combined rate.
std::vector<double> project_demand(std::span<const LocationDemand> demand, const Projection& p,
                                   bool use_mobility);

/// Scales every entry of a raw peak matrix by the combined factor, or by
/// the per-row class factor when `row_class` is given.
DemandMatrix project_demand(const DemandMatrix& peak, const Projection& p,
                            std::span<const MobilityClass> row_class = {});

}  // namespace celltrace
