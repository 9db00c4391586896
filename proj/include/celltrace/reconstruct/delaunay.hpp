#pragma once

#include <span>
#include <string>
#include <vector>

#include "celltrace/core/types.hpp"

namespace celltrace {

/// First-tier neighbor sets: Delaunay adjacency of `points`, each list sorted
/// ascending. Collinear input degenerates to a chain along the line;
/// coincident points share the neighbors of their representative.
std::vector<std::vector<std::size_t>> delaunay_neighbors(std::span<const Point> points);

struct SiteDistance {
  std::string site_id;
  std::string op;
  Point position;
  std::size_t neighbor_count = 0;
  double mean_neighbor_distance_m = 0.0;
};

struct InterSiteDistances {
  std::vector<SiteDistance> sites;  // sorted by (op, site_id)
  double mean_m = 0.0;
  std::vector<double> sorted_m;     // for CDF output
};

/// Mean distance from each site of `cls` to its Delaunay neighbors of the
/// same class and operator. Sectors sharing a site_id count once.
/// Throws Error(TooFewSites) unless some operator has >= 2 such sites.
InterSiteDistances inter_site_distance(std::span<const BaseStation> stations, BsClass cls);

}  // namespace celltrace
