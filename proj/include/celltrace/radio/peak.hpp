#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "celltrace/core/grid.hpp"
#include "celltrace/ingest/mobility.hpp"
#include "celltrace/ingest/trace.hpp"

namespace celltrace {

/// A cell's busiest slot: the largest total downlink bytes, earliest slot
/// on ties.
struct CellPeak {
  CellKey key;
  Tech tech = Tech::LTE;
  std::int64_t slot = 0;
  std::int64_t bytes = 0;
};

/// Per-cell maxima over all slots, sorted by (key, tech). Every cell
/// contributes its own peak, so the snapshot holds peaks of different slots
/// at once.
std::vector<CellPeak> combined_peak(const TraceTable& trace);

enum class MobilityClass : std::uint8_t { Static, Mobile, Unknown };
inline constexpr std::size_t kMobilityClassCount = 3;

/// Peak-snapshot downlink demand of one operator at one analysis cell, in
/// bit/s (bytes per hourly slot * 8 / 3600), split by user mobility.
struct LocationDemand {
  std::string op;
  RasterCell cell;
  std::array<double, kMobilityClassCount> lte_bps{};
  std::array<double, kMobilityClassCount> g3_bps{};

  double lte_total() const noexcept { return lte_bps[0] + lte_bps[1] + lte_bps[2]; }
  double g3_total() const noexcept { return g3_bps[0] + g3_bps[1] + g3_bps[2]; }
};

/// Spreads each cell's peak-slot bytes over the analysis cells its records
/// fall in. Without `mobility`, all demand is Unknown. Sorted by (op, cell).
std::vector<LocationDemand> peak_location_demand(const TraceTable& trace, const Grid& grid,
                                                 const std::vector<CellPeak>& peaks,
                                                 const MobilityFlags* mobility = nullptr);

inline constexpr double kBytesPerSlotToBps = 8.0 / 3600.0;

}  // namespace celltrace
