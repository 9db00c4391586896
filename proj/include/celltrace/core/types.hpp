#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "celltrace/core/geo.hpp"
#include "celltrace/core/grid.hpp"

namespace celltrace {

enum class AreaType : std::uint8_t { Urban, Suburban, Rural };
inline constexpr int kAreaTypeCount = 3;

std::string_view to_string(AreaType a) noexcept;
/// Accepts "urban" / "suburban" / "rural", case-insensitive.
std::optional<AreaType> parse_area_type(std::string_view s) noexcept;

enum class BsClass : std::uint8_t { Macro, Micro };
std::string_view to_string(BsClass c) noexcept;

enum class Tier : std::uint8_t { Macro, Micro };

inline Tier tier_of(BsClass c) noexcept {
  return c == BsClass::Macro ? Tier::Macro : Tier::Micro;
}

struct Antenna {
  enum class Kind : std::uint8_t { Omni, Sector } kind = Kind::Omni;
  double azimuth_deg = 0.0;  // boresight, clockwise from north
  double beamwidth_deg = 120.0;

  static Antenna omni() { return {}; }
  static Antenna sector(double azimuth_deg, double beamwidth_deg = 120.0) {
    return {Kind::Sector, azimuth_deg, beamwidth_deg};
  }
};

/// Class-dependent radio defaults; overridable through configuration.
struct BsDefaults {
  double macro_tx_power_dbm = 43.0;
  double micro_tx_power_dbm = 30.0;
  double macro_height_m = 25.0;
  double micro_height_m = 10.0;
};

struct BaseStation {
  std::string id;
  std::string op;  // operator label
  TileId tile;
  Point position;  // meters in the grid projection
  LatLon latlon;
  BsClass cls = BsClass::Micro;
  Antenna antenna;
  double tx_power_dbm = 30.0;
  double height_m = 10.0;
  std::string site_id;
  /// Convex coverage polygon (CCW), empty when unknown (synthetic BSs).
  std::vector<Point> coverage;
  bool degenerate = false;
};

/// Builds a BS with the class defaults for power and height.
BaseStation make_base_station(std::string id, std::string op, BsClass cls,
                              Point position, const Grid& grid,
                              const BsDefaults& defaults = {});

}  // namespace celltrace
