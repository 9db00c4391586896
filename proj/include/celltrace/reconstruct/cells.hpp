#pragma once

#include <optional>
#include <span>
#include <vector>

#include "celltrace/core/types.hpp"
#include "celltrace/ingest/trace.hpp"

namespace celltrace {

inline constexpr double kMacroRangeWatershedM = 2000.0;

/// Coverage footprint of one cell, rebuilt from the positions at which users
/// reported being served by it.
struct CellRecord {
  CellKey key;
  std::vector<Point> samples;
  std::vector<Point> hull;  // convex, CCW; < 3 vertices when degenerate
  double area_m2 = 0.0;
  double perimeter_m = 0.0;
  Point barycenter;
  /// Largest distance from the barycenter to a hull vertex (or sample when
  /// degenerate).
  double range_m = 0.0;
  std::optional<double> roundness;  // absent for degenerate cells
  BsClass cls = BsClass::Micro;
  bool degenerate = false;

  std::size_t sample_count() const noexcept { return samples.size(); }
};

struct CellBuildOptions {
  bool lte_only = true;
  double macro_watershed_m = kMacroRangeWatershedM;
};

/// One record per distinct (operator, cell id), sorted by that key.
std::vector<CellRecord> build_cells(const TraceTable& trace, const CellBuildOptions& opts = {});

/// 4*pi*A/P^2 of a non-degenerate hull: 1 for a circle, tending to 0 for a
/// segment. Throws Error(DegenerateCell) for fewer than three vertices.
double roundness(std::span<const Point> hull);
double roundness(const CellRecord& cell);

/// Macro iff the range strictly exceeds the watershed.
BsClass classify_cell(const CellRecord& cell, double watershed_m = kMacroRangeWatershedM) noexcept;

}  // namespace celltrace
