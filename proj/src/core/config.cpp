#include "celltrace/core/config.hpp"

#include <string>

#include "celltrace/core/error.hpp"

namespace celltrace {

CoreConfig core_config_from_json(const nlohmann::json& doc) {
  try {
    const auto& g = doc.at("grid");
    Grid grid(LatLon{g.at("origin_lat").get<double>(), g.at("origin_lon").get<double>()},
              g.at("rows").get<int>(), g.at("cols").get<int>(),
              g.value("tile_size_m", 50.0), g.value("analysis_cell_m", 10.0));
    int offset = 0;
    if (doc.contains("calendar")) offset = doc["calendar"].value("utc_offset_hours", 0);
    if (offset < -12 || offset > 14)
      throw Error(ErrorCode::ConfigError, "calendar.utc_offset_hours out of range");
    return {std::move(grid), offset};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ConfigError, std::string("grid configuration: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidArgument) throw Error(ErrorCode::ConfigError, e.what());
    throw;
  }
}

nlohmann::json to_json(const Grid& grid) {
  return {{"origin_lat", grid.origin().lat}, {"origin_lon", grid.origin().lon},
          {"rows", grid.rows()}, {"cols", grid.cols()},
          {"tile_size_m", grid.tile_size_m()}, {"analysis_cell_m", grid.analysis_cell_m()}};
}

}  // namespace celltrace
