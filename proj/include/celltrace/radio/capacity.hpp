#pragma once

#include <cstdint>
#include <vector>

#include "celltrace/radio/scenario.hpp"
#include "celltrace/radio/throughput.hpp"

namespace celltrace {

/// Capacity levers applied on top of the baseline network.
struct CapacityModifiers {
  double mimo_factor = 1.0;
  /// Extra RBs per BS (refarmed spectrum), before the reuse split.
  std::vector<double> extra_rbs;
  /// Per location, the CoMP aiding BS or -1.
  std::vector<std::int32_t> comp_aider;
  /// RBs debited from each aiding BS.
  std::vector<double> comp_debit_rbs;
  /// Per BS, 1 when it blanks `abs_fraction` of its subframes (aligned).
  std::vector<std::uint8_t> abs_muted;
  double abs_fraction = 0.25;
};

struct CapacityState {
  // Per location.
  std::vector<double> demand_bps;
  std::vector<double> sinr_db;    // unblanked phase; NaN when uncovered
  std::vector<double> snr_db;
  std::vector<double> rate_per_rb;  // phase-weighted bit/s per RB
  std::vector<double> capacity_bps;
  std::vector<double> share;        // proportional-fair RB share at the server
  // Per BS.
  std::vector<double> rb_budget;
  std::vector<double> rb_allocated;

  std::size_t location_count() const noexcept { return demand_bps.size(); }
  bool struggling(std::size_t l) const noexcept {
    return demand_bps[l] > 0.0 && demand_bps[l] > capacity_bps[l];
  }
  std::vector<std::size_t> struggling_set() const;
  double spare_rbs(std::size_t b) const noexcept { return rb_budget[b] - rb_allocated[b]; }
};

/// Offered throughput at every location under proportional-fair sharing:
/// capacity = R_s * rate(SINR) * d_l / sum of demand served by s, where
/// R_s = (RBs of the band + extra) / K. Locations without demand get no
/// share, so the shares of one BS sum to 1. With ABS, rates mix the blanked and
/// unblanked interference phases and a muted server offers nothing while
/// blanked.
CapacityState evaluate_capacity(const RadioScenario& sc, const ReusePlan& plan,
                                const ThroughputTable& table,
                                const std::vector<double>& demand_bps,
                                const CapacityModifiers& mods = {});

/// demand / capacity per location: 0 for zero demand, +inf where demand
/// meets no capacity.
std::vector<double> pressure(const CapacityState& st);

}  // namespace celltrace
