#include "celltrace/reconstruct/placement.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace celltrace {

std::size_t best_corner(std::span<const Point> hull, std::span<const Point> samples) {
  std::size_t best = 0;
  double best_mean = std::numeric_limits<double>::infinity();
  for (std::size_t v = 0; v < hull.size(); ++v) {
    double total = 0.0;
    for (const Point& s : samples) total += distance(hull[v], s);
    const double mean = total / static_cast<double>(samples.size());
    const bool tie = mean == best_mean;
    const bool smaller_key = hull[v].x < hull[best].x ||
                             (hull[v].x == hull[best].x && hull[v].y < hull[best].y);
    if (mean < best_mean || (tie && smaller_key)) {
      best = v;
      best_mean = mean;
    }
  }
  return best;
}

double bearing_deg(Point from, Point to) noexcept {
  const double dx = to.x - from.x;
  const double dy = to.y - from.y;
  if (dx == 0.0 && dy == 0.0) return 0.0;
  double b = std::atan2(dx, dy) * 180.0 / kPi;
  if (b < 0.0) b += 360.0;
  return b >= 360.0 ? 0.0 : b;
}

namespace {

double angular_gap(double a, double b) noexcept {
  const double d = std::fmod(std::abs(a - b), 360.0);
  return d > 180.0 ? 360.0 - d : d;
}

struct Site {
  std::string op;
  Point position;
  std::vector<std::size_t> members;  // indices into the output BS vector
};

}  // namespace

std::vector<BaseStation> place_bs(std::span<const CellRecord> cells, const Grid& grid,
                                  const PlacementOptions& opts) {
  std::vector<BaseStation> out;
  out.reserve(cells.size());
  std::vector<Site> sites;

  for (const CellRecord& cell : cells) {
    Point pos = cell.barycenter;
    Antenna antenna = Antenna::omni();
    bool macro_sector = false;

    if (!cell.degenerate) {
      const bool omni = cell.cls == BsClass::Micro && cell.roundness &&
                        *cell.roundness > opts.omni_roundness;
      if (!omni) {
        pos = cell.hull[best_corner(cell.hull, cell.samples)];
        antenna = Antenna::sector(bearing_deg(pos, cell.barycenter), opts.sector_beamwidth_deg);
        macro_sector = cell.cls == BsClass::Macro;
      }
    }

    BaseStation bs = make_base_station(bs_id(cell.key), cell.key.op, cell.cls, pos, grid,
                                       opts.defaults);
    bs.antenna = antenna;
    bs.degenerate = cell.degenerate;
    if (!cell.degenerate) bs.coverage = cell.hull;
    const std::size_t idx = out.size();
    out.push_back(std::move(bs));

    if (!macro_sector) continue;
    Site* target = nullptr;
    double target_dist = std::numeric_limits<double>::infinity();
    for (Site& s : sites) {
      if (s.op != cell.key.op || s.members.size() >= 3) continue;
      const double d = distance(s.position, pos);
      if (d <= opts.colocation_radius_m && d < target_dist) {
        target = &s;
        target_dist = d;
      }
    }
    if (target == nullptr) {
      sites.push_back(Site{cell.key.op, pos, {}});
      target = &sites.back();
    }
    target->members.push_back(idx);
  }

  // Sites with more than one sector share the first member's corner and use
  // the standard 0/120/240 orientations, each sector taking the free one
  // closest to its own cell.
  for (const Site& site : sites) {
    const std::string site_id = out[site.members.front()].id;
    for (std::size_t m : site.members) out[m].site_id = site_id;
    if (site.members.size() < 2) continue;
    std::array<bool, 3> taken{};
    for (std::size_t m : site.members) {
      BaseStation& bs = out[m];
      const double wanted = bs.antenna.azimuth_deg;
      int pick = -1;
      for (int a = 0; a < 3; ++a) {
        if (taken[static_cast<std::size_t>(a)]) continue;
        if (pick < 0 || angular_gap(wanted, a * 120.0) < angular_gap(wanted, pick * 120.0))
          pick = a;
      }
      taken[static_cast<std::size_t>(pick)] = true;
      bs.position = site.position;
      bs.latlon = grid.unproject(site.position);
      bs.tile = grid.to_tile(site.position);
      bs.antenna.azimuth_deg = pick * 120.0;
    }
  }
  return out;
}

}  // namespace celltrace
