#include "celltrace/io/geojson.hpp"

#include <fstream>

#include "celltrace/core/error.hpp"

namespace celltrace {

namespace {

nlohmann::ordered_json coord(LatLon p) { return nlohmann::ordered_json::array({p.lon, p.lat}); }

}  // namespace

void FeatureCollection::add_point(LatLon p, Props props) {
  nlohmann::ordered_json f;
  f["type"] = "Feature";
  f["geometry"] = {{"type", "Point"}, {"coordinates", coord(p)}};
  f["properties"] = std::move(props);
  features_.push_back(std::move(f));
}

void FeatureCollection::add_polygon(std::span<const LatLon> ring, Props props) {
  auto coords = nlohmann::ordered_json::array();
  for (const LatLon& p : ring) coords.push_back(coord(p));
  if (!ring.empty() && (ring.front().lat != ring.back().lat || ring.front().lon != ring.back().lon))
    coords.push_back(coord(ring.front()));
  nlohmann::ordered_json f;
  f["type"] = "Feature";
  f["geometry"] = {{"type", "Polygon"}, {"coordinates", nlohmann::ordered_json::array({coords})}};
  f["properties"] = std::move(props);
  features_.push_back(std::move(f));
}

nlohmann::ordered_json FeatureCollection::to_json() const {
  nlohmann::ordered_json j;
  j["type"] = "FeatureCollection";
  j["features"] = features_;
  return j;
}

void FeatureCollection::write(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::FileError, "cannot write " + path.string());
  out << to_json().dump() << '\n';
}

std::vector<LatLon> square_ring(const Grid& grid, Point sw, double side_m) {
  return {grid.unproject(sw), grid.unproject({sw.x + side_m, sw.y}),
          grid.unproject({sw.x + side_m, sw.y + side_m}), grid.unproject({sw.x, sw.y + side_m})};
}

std::vector<LatLon> ring_of(const Grid& grid, std::span<const Point> poly) {
  std::vector<LatLon> out;
  out.reserve(poly.size());
  for (const Point& p : poly) out.push_back(grid.unproject(p));
  return out;
}

}  // namespace celltrace
