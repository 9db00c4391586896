#pragma once

#include <filesystem>
#include <istream>
#include <vector>

#include "celltrace/core/grid.hpp"
#include "celltrace/core/types.hpp"

namespace celltrace {

/// Area type of every synthesis tile.
class AreaMap {
 public:
  AreaMap(int rows, int cols, std::vector<AreaType> types);
  static AreaMap constant(const Grid& grid, AreaType type);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  AreaType at(TileId t) const noexcept {
    return types_[static_cast<std::size_t>(t.row) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(t.col)];
  }
  const std::vector<AreaType>& types() const noexcept { return types_; }

 private:
  int rows_;
  int cols_;
  std::vector<AreaType> types_;
};

/// CSV `row,col,area_type` covering every tile exactly once.
AreaMap load_area_map_csv(std::istream& in, const Grid& grid);

/// GeoJSON FeatureCollection of (Multi)Polygons with an "area_type" property,
/// rasterized by majority over analysis-cell centers inside each tile. Tiles
/// no polygon touches make the map partial, which is a SchemaError.
AreaMap load_area_map_geojson(std::istream& in, const Grid& grid);

/// Dispatches on extension (.csv, .geojson/.json).
AreaMap load_area_map(const std::filesystem::path& path, const Grid& grid);

}  // namespace celltrace
