#pragma once

#include <span>
#include <string>
#include <vector>

#include "celltrace/core/types.hpp"
#include "celltrace/reconstruct/cells.hpp"

namespace celltrace {

struct PlacementOptions {
  /// Micro cells rounder than this get an omni BS at the barycenter.
  double omni_roundness = 0.5;
  /// Macro corners closer than this join one tri-sector site.
  double colocation_radius_m = 50.0;
  double sector_beamwidth_deg = 120.0;
  BsDefaults defaults;
};

/// Index of the hull vertex with the smallest mean distance to `samples`;
/// ties go to the lexicographically smallest (x, y) vertex so the result
/// does not depend on vertex order.
std::size_t best_corner(std::span<const Point> hull, std::span<const Point> samples);

/// "<op>:<cell_id>", unique across operators.
inline std::string bs_id(const CellKey& key) { return key.op + ":" + key.cell_id; }

/// Clockwise bearing from north, in [0, 360).
double bearing_deg(Point from, Point to) noexcept;

/// One BS per cell, in cell order:
///  - macro: sector at the best corner, merged with nearby macro corners of
///    the same operator into tri-sector sites (azimuths 0/120/240);
///  - micro, roundness > omni_roundness: omni at the barycenter;
///  - other micro: sector at the best corner aimed at the barycenter;
///  - degenerate: omni at the sample centroid, flagged.
std::vector<BaseStation> place_bs(std::span<const CellRecord> cells, const Grid& grid,
                                  const PlacementOptions& opts = {});

}  // namespace celltrace
