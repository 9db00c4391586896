#pragma once

#include <filesystem>
#include <json.hpp>
#include <span>
#include <vector>

#include "celltrace/core/grid.hpp"

namespace celltrace {

/// Minimal GeoJSON FeatureCollection builder (WGS84 lon/lat).
class FeatureCollection {
 public:
  using Props = nlohmann::ordered_json;

  void add_point(LatLon p, Props props);
  /// Closes the ring if needed.
  void add_polygon(std::span<const LatLon> ring, Props props);
  std::size_t size() const noexcept { return features_.size(); }

  nlohmann::ordered_json to_json() const;
  void write(const std::filesystem::path& path) const;

 private:
  std::vector<nlohmann::ordered_json> features_;
};

/// Ring of the axis-aligned square with south-west corner `sw`.
std::vector<LatLon> square_ring(const Grid& grid, Point sw, double side_m);
/// Ring of a planar polygon.
std::vector<LatLon> ring_of(const Grid& grid, std::span<const Point> poly);

}  // namespace celltrace
