#include "celltrace/ingest/area_map.hpp"

#include <array>
#include <fstream>
#include <string>

#include <json.hpp>

#include "celltrace/core/error.hpp"
#include "celltrace/core/polygon.hpp"
#include "celltrace/ingest/csv.hpp"

namespace celltrace {

AreaMap::AreaMap(int rows, int cols, std::vector<AreaType> types)
    : rows_(rows), cols_(cols), types_(std::move(types)) {
  if (types_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
    throw Error(ErrorCode::SchemaError, "area map does not cover the grid");
}

AreaMap AreaMap::constant(const Grid& grid, AreaType type) {
  return AreaMap(grid.rows(), grid.cols(), std::vector<AreaType>(grid.tile_count(), type));
}

AreaMap load_area_map_csv(std::istream& in, const Grid& grid) {
  std::string line;
  if (!std::getline(in, line))
    throw Error(ErrorCode::SchemaError, "area map is empty (header required)");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "row,col,area_type")
    throw Error(ErrorCode::SchemaError, "area map header must be 'row,col,area_type'");

  std::vector<int> seen(grid.tile_count(), 0);
  std::vector<AreaType> types(grid.tile_count(), AreaType::Urban);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto f = csv::split_line(line);
    const auto row = f.size() == 3 ? csv::parse_number<int>(f[0]) : std::nullopt;
    const auto col = f.size() == 3 ? csv::parse_number<int>(f[1]) : std::nullopt;
    const auto type = f.size() == 3 ? parse_area_type(f[2]) : std::nullopt;
    if (!row || !col || !type || !grid.valid(TileId{*row, *col}))
      throw Error(ErrorCode::SchemaError,
                  "area map line " + std::to_string(line_no) + " is invalid");
    const std::size_t idx = grid.index(TileId{*row, *col});
    if (seen[idx]++)
      throw Error(ErrorCode::SchemaError,
                  "area map assigns tile (" + f[0] + "," + f[1] + ") twice");
    types[idx] = *type;
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) {
      const TileId t = grid.tile_at(i);
      throw Error(ErrorCode::SchemaError, "area map misses tile (" + std::to_string(t.row) +
                                              "," + std::to_string(t.col) + ")");
    }
  }
  return AreaMap(grid.rows(), grid.cols(), std::move(types));
}

namespace {

struct AreaPolygon {
  AreaType type;
  std::vector<std::vector<Point>> rings;  // outer ring first, then holes
};

std::vector<Point> ring_from_json(const nlohmann::json& ring, const Grid& grid) {
  std::vector<Point> pts;
  for (const auto& c : ring) pts.push_back(grid.project(LatLon{c.at(1).get<double>(), c.at(0).get<double>()}));
  if (pts.size() > 1 && pts.front() == pts.back()) pts.pop_back();
  return pts;
}

bool inside(const AreaPolygon& poly, Point p) {
  if (poly.rings.empty() || !polygon_contains(poly.rings[0], p)) return false;
  for (std::size_t h = 1; h < poly.rings.size(); ++h)
    if (polygon_contains(poly.rings[h], p)) return false;
  return true;
}

}  // namespace

AreaMap load_area_map_geojson(std::istream& in, const Grid& grid) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SchemaError, std::string("area map GeoJSON: ") + e.what());
  }
  std::vector<AreaPolygon> polys;
  try {
    for (const auto& feature : doc.at("features")) {
      const auto type = parse_area_type(feature.at("properties").at("area_type").get<std::string>());
      if (!type) throw Error(ErrorCode::SchemaError, "unknown area_type in GeoJSON");
      const auto& geom = feature.at("geometry");
      const std::string kind = geom.at("type").get<std::string>();
      auto add_polygon = [&](const nlohmann::json& rings) {
        AreaPolygon p{*type, {}};
        for (const auto& ring : rings) p.rings.push_back(ring_from_json(ring, grid));
        polys.push_back(std::move(p));
      };
      if (kind == "Polygon") {
        add_polygon(geom.at("coordinates"));
      } else if (kind == "MultiPolygon") {
        for (const auto& rings : geom.at("coordinates")) add_polygon(rings);
      } else {
        throw Error(ErrorCode::SchemaError, "unsupported geometry type " + kind);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SchemaError, std::string("area map GeoJSON: ") + e.what());
  }

  const int sub = std::max(1, static_cast<int>(grid.tile_size_m() / grid.analysis_cell_m() + 0.5));
  const double step = grid.tile_size_m() / sub;
  std::vector<AreaType> types(grid.tile_count(), AreaType::Urban);
  for (std::size_t i = 0; i < grid.tile_count(); ++i) {
    const TileId t = grid.tile_at(i);
    std::array<int, kAreaTypeCount> votes{};
    for (int r = 0; r < sub; ++r) {
      for (int c = 0; c < sub; ++c) {
        const Point p{t.col * grid.tile_size_m() + (c + 0.5) * step,
                      t.row * grid.tile_size_m() + (r + 0.5) * step};
        for (const auto& poly : polys) {
          if (inside(poly, p)) {
            ++votes[static_cast<std::size_t>(poly.type)];
            break;  // first matching feature wins for overlapping input
          }
        }
      }
    }
    int best = -1;
    int best_votes = 0;
    for (int a = 0; a < kAreaTypeCount; ++a) {
      if (votes[static_cast<std::size_t>(a)] > best_votes) {
        best_votes = votes[static_cast<std::size_t>(a)];
        best = a;
      }
    }
    if (best < 0)
      throw Error(ErrorCode::SchemaError, "area map GeoJSON leaves tile (" +
                                              std::to_string(t.row) + "," +
                                              std::to_string(t.col) + ") uncovered");
    types[i] = static_cast<AreaType>(best);
  }
  return AreaMap(grid.rows(), grid.cols(), std::move(types));
}

AreaMap load_area_map(const std::filesystem::path& path, const Grid& grid) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::FileError, "cannot open area map " + path.string());
  const auto ext = path.extension().string();
  if (ext == ".geojson" || ext == ".json") return load_area_map_geojson(in, grid);
  return load_area_map_csv(in, grid);
}

}  // namespace celltrace
