#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "celltrace/radio/capacity.hpp"

namespace celltrace {

/// Hill-climbing objective: served locations with SINR >= threshold first,
/// then the total offered throughput.
struct ReuseObjective {
  std::size_t served = 0;
  double throughput_bps = 0.0;

  /// Strictly better: more served locations, or as many and more throughput
  /// beyond rounding noise.
  bool better_than(const ReuseObjective& o) const noexcept {
    if (served != o.served) return served > o.served;
    return throughput_bps > o.throughput_bps * (1.0 + 1e-12) + 1e-9;
  }
  bool operator>=(const ReuseObjective& o) const noexcept { return !o.better_than(*this); }
};

ReuseObjective reuse_objective(const RadioScenario& sc, const ReusePlan& plan,
                               const ThroughputTable& table,
                               const std::vector<double>& demand_bps,
                               double min_sinr_db = -10.0);

struct ReuseOptions {
  /// Side of the square areas locations are grouped into.
  double area_block_m = 500.0;
  double min_sinr_db = -10.0;
  /// 0 repeats sweeps until one accepts nothing.
  int max_sweeps = 0;
};

struct ReuseResult {
  ReusePlan plan;
  ReuseObjective baseline;
  ReuseObjective final_objective;
  /// Objective after each accepted flip.
  std::vector<ReuseObjective> trajectory;
  std::size_t evaluations = 0;
  int sweeps = 0;
};

/// Starting from K = 1 everywhere, visits areas by ascending minimum SINR
/// and, within an area, the BSs covering its locations by descending
/// coverage. Each K = 1 BS is tried at K = 3 on its least-interfered
/// sub-band; the flip is kept iff the objective strictly improves. Sweeps
/// repeat while some flip is accepted.
ReuseResult optimize_reuse(const RadioScenario& sc, const ThroughputTable& table,
                           const std::vector<double>& demand_bps, const ReuseOptions& opts = {});

/// Sub-band of BS b receiving the least same-tier power from K = 3 BSs at
/// the locations b covers; ties go to the lowest index.
int least_interfered_sub_band(const RadioScenario& sc, const ReusePlan& plan, std::size_t b);

}  // namespace celltrace
