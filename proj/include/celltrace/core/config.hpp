#pragma once

#include <json.hpp>

#include "celltrace/core/grid.hpp"

namespace celltrace {

/// Grid and calendar settings shared by every module.
///
///   "grid": {"origin_lat": 37.70, "origin_lon": -122.52, "rows": 30,
///            "cols": 30, "tile_size_m": 50, "analysis_cell_m": 10},
///   "calendar": {"utc_offset_hours": -8}
struct CoreConfig {
  Grid grid;
  int utc_offset_hours = 0;
};

/// Throws Error(ConfigError) on missing or invalid keys.
CoreConfig core_config_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const Grid& grid);

}  // namespace celltrace
