#include "celltrace/core/grid.hpp"

#include <cmath>
#include <string>

#include "celltrace/core/error.hpp"

namespace celltrace {

namespace {

// Projection round trips leave ~1e-12 relative noise on coordinates that sit
// exactly on a cell boundary; snap those back before flooring.
int snapped_floor(double v) {
  const double r = std::round(v);
  if (std::abs(v - r) < 1e-9) return static_cast<int>(r);
  return static_cast<int>(std::floor(v));
}

int cell_index(double coord, double size, int count) {
  int i = snapped_floor(coord / size);
  if (i == count) i = count - 1;  // closed outer edge
  return i;
}

}  // namespace

Grid::Grid(LatLon origin, int rows, int cols, double tile_size_m,
           double analysis_cell_m)
    : projection_(origin),
      rows_(rows),
      cols_(cols),
      tile_size_m_(tile_size_m),
      analysis_cell_m_(analysis_cell_m) {
  if (rows <= 0 || cols <= 0)
    throw Error(ErrorCode::InvalidArgument, "grid extent must be positive");
  if (!(tile_size_m > 0.0) || !(analysis_cell_m > 0.0))
    throw Error(ErrorCode::InvalidArgument, "grid cell sizes must be positive");
  if (analysis_cell_m > tile_size_m)
    throw Error(ErrorCode::InvalidArgument,
                "analysis cell must not exceed the tile size");
  analysis_rows_ =
      static_cast<int>(std::ceil(height_m() / analysis_cell_m - 1e-9));
  analysis_cols_ = static_cast<int>(std::ceil(width_m() / analysis_cell_m - 1e-9));
}

bool Grid::contains(Point p) const noexcept {
  constexpr double eps = 1e-6;
  return p.x >= -eps && p.y >= -eps && p.x <= width_m() + eps &&
         p.y <= height_m() + eps;
}

TileId Grid::to_tile(Point p) const {
  if (!contains(p))
    throw Error(ErrorCode::OutOfExtent,
                "point (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                    ") m lies outside the grid");
  TileId t{cell_index(p.y, tile_size_m_, rows_),
           cell_index(p.x, tile_size_m_, cols_)};
  if (t.row < 0) t.row = 0;
  if (t.col < 0) t.col = 0;
  return t;
}

RasterCell Grid::to_analysis_cell(Point p) const {
  if (!contains(p))
    throw Error(ErrorCode::OutOfExtent, "point lies outside the analysis raster");
  RasterCell c{cell_index(p.y, analysis_cell_m_, analysis_rows_),
               cell_index(p.x, analysis_cell_m_, analysis_cols_)};
  if (c.row < 0) c.row = 0;
  if (c.col < 0) c.col = 0;
  return c;
}

std::vector<TileId> Grid::neighbors(TileId t) const {
  std::vector<TileId> out;
  out.reserve(8);
  for (int dr = -1; dr <= 1; ++dr) {
    for (int dc = -1; dc <= 1; ++dc) {
      if (dr == 0 && dc == 0) continue;
      TileId n{t.row + dr, t.col + dc};
      if (valid(n)) out.push_back(n);
    }
  }
  return out;
}

}  // namespace celltrace
