#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "celltrace/core/geo.hpp"

namespace celltrace {

struct TileId {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const TileId&, const TileId&) = default;
};

/// Cell of the fine analysis raster.
struct RasterCell {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const RasterCell&, const RasterCell&) = default;
};

/// Two co-registered rasters anchored at the south-west corner `origin`:
/// synthesis tiles (default 50 m) and a finer analysis raster (default 10 m).
/// Row index grows northwards, column index eastwards. Every tile is the
/// half-open square [c*s, (c+1)*s) x [r*s, (r+1)*s); the outer north and east
/// edges of the extent are closed so the extent is partitioned exactly.
class Grid {
 public:
  Grid(LatLon origin, int rows, int cols, double tile_size_m = 50.0,
       double analysis_cell_m = 10.0);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  std::size_t tile_count() const noexcept {
    return static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_);
  }
  double tile_size_m() const noexcept { return tile_size_m_; }
  double analysis_cell_m() const noexcept { return analysis_cell_m_; }
  double width_m() const noexcept { return cols_ * tile_size_m_; }
  double height_m() const noexcept { return rows_ * tile_size_m_; }
  LatLon origin() const noexcept { return projection_.origin(); }
  const LocalProjection& projection() const noexcept { return projection_; }

  Point project(LatLon p) const noexcept { return projection_.project(p); }
  LatLon unproject(Point p) const noexcept { return projection_.unproject(p); }

  bool contains(Point p) const noexcept;
  bool contains(LatLon p) const noexcept { return contains(project(p)); }

  /// Throws Error(OutOfExtent) for points outside the extent.
  TileId to_tile(Point p) const;
  TileId to_tile(LatLon p) const { return to_tile(project(p)); }

  std::size_t index(TileId t) const noexcept {
    return static_cast<std::size_t>(t.row) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(t.col);
  }
  TileId tile_at(std::size_t index) const noexcept {
    return {static_cast<int>(index / static_cast<std::size_t>(cols_)),
            static_cast<int>(index % static_cast<std::size_t>(cols_))};
  }
  bool valid(TileId t) const noexcept {
    return t.row >= 0 && t.row < rows_ && t.col >= 0 && t.col < cols_;
  }
  Point tile_center(TileId t) const noexcept {
    return {(t.col + 0.5) * tile_size_m_, (t.row + 0.5) * tile_size_m_};
  }

  /// Moore 8-neighborhood clipped at the extent, in (row, col) order.
  std::vector<TileId> neighbors(TileId t) const;

  int analysis_rows() const noexcept { return analysis_rows_; }
  int analysis_cols() const noexcept { return analysis_cols_; }
  std::size_t analysis_count() const noexcept {
    return static_cast<std::size_t>(analysis_rows_) *
           static_cast<std::size_t>(analysis_cols_);
  }
  RasterCell to_analysis_cell(Point p) const;
  std::size_t analysis_index(RasterCell c) const noexcept {
    return static_cast<std::size_t>(c.row) *
               static_cast<std::size_t>(analysis_cols_) +
           static_cast<std::size_t>(c.col);
  }
  RasterCell analysis_at(std::size_t index) const noexcept {
    return {static_cast<int>(index / static_cast<std::size_t>(analysis_cols_)),
            static_cast<int>(index % static_cast<std::size_t>(analysis_cols_))};
  }
  Point analysis_center(RasterCell c) const noexcept {
    return {(c.col + 0.5) * analysis_cell_m_, (c.row + 0.5) * analysis_cell_m_};
  }

  friend bool operator==(const Grid& a, const Grid& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.tile_size_m_ == b.tile_size_m_ &&
           a.analysis_cell_m_ == b.analysis_cell_m_ &&
           a.origin().lat == b.origin().lat && a.origin().lon == b.origin().lon;
  }

 private:
  LocalProjection projection_;
  int rows_;
  int cols_;
  double tile_size_m_;
  double analysis_cell_m_;
  int analysis_rows_;
  int analysis_cols_;
};

}  // namespace celltrace
