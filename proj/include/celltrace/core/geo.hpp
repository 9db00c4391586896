#pragma once

#include <cmath>

namespace celltrace {

struct LatLon {
  double lat = 0.0;
  double lon = 0.0;
};

/// Planar position in meters, x east and y north of a projection origin.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline double distance(Point a, Point b) noexcept {
  return std::hypot(a.x - b.x, a.y - b.y);
}

inline constexpr double kEarthRadiusM = 6371008.8;
inline constexpr double kPi = 3.14159265358979323846;

/// Local equirectangular projection around a fixed origin. Adequate at
/// city scale (tens of kilometers), where its error stays below 0.1%.
class LocalProjection {
 public:
  LocalProjection() = default;
  explicit LocalProjection(LatLon origin) noexcept
      : origin_(origin),
        m_per_deg_lat_(kEarthRadiusM * kPi / 180.0),
        m_per_deg_lon_(kEarthRadiusM * kPi / 180.0 *
                       std::cos(origin.lat * kPi / 180.0)) {}

  Point project(LatLon p) const noexcept {
    return {(p.lon - origin_.lon) * m_per_deg_lon_,
            (p.lat - origin_.lat) * m_per_deg_lat_};
  }

  LatLon unproject(Point p) const noexcept {
    return {origin_.lat + p.y / m_per_deg_lat_,
            origin_.lon + p.x / m_per_deg_lon_};
  }

  LatLon origin() const noexcept { return origin_; }

 private:
  LatLon origin_{};
  double m_per_deg_lat_ = kEarthRadiusM * kPi / 180.0;
  double m_per_deg_lon_ = kEarthRadiusM * kPi / 180.0;
};

}  // namespace celltrace
