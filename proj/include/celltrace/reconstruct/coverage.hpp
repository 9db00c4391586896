#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "celltrace/core/grid.hpp"
#include "celltrace/reconstruct/cells.hpp"

namespace celltrace {

/// Number of cell hulls covering each analysis-raster cell center.
struct CoverageRaster {
  int rows = 0;
  int cols = 0;
  double cell_m = 0.0;
  std::vector<std::int32_t> counts;  // row-major

  std::int32_t at(RasterCell c) const noexcept {
    return counts[static_cast<std::size_t>(c.row) * static_cast<std::size_t>(cols) +
                  static_cast<std::size_t>(c.col)];
  }
};

/// Degenerate cells cover nothing. Boundary points count as covered.
CoverageRaster coverage_density(std::span<const CellRecord> cells, const Grid& grid);

}  // namespace celltrace
