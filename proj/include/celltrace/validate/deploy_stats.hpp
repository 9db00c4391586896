#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "celltrace/deploy/deployment.hpp"

namespace celltrace {

/// Step CDF of an integer sample: (value, P[X <= value]) at each distinct
/// value, ascending.
using EmpiricalCdf = std::vector<std::pair<std::int64_t, double>>;

EmpiricalCdf empirical_cdf(std::span<const std::int64_t> sample);
/// sup_x |F(x) - G(x)| over both supports.
double ks_distance(const EmpiricalCdf& f, const EmpiricalCdf& g);

/// Per tile: sum of B over its clipped Moore neighborhood, the tile itself
/// excluded.
std::vector<std::int64_t> neighborhood_sums(const Deployment& d);

struct DeploymentStats {
  EmpiricalCdf real_tile, synth_tile;
  EmpiricalCdf real_neigh, synth_neigh;
  double real_tile_mean = 0.0, synth_tile_mean = 0.0;
  double real_neigh_mean = 0.0, synth_neigh_mean = 0.0;
  double ks_tile = 0.0;
  double ks_neigh = 0.0;
};

/// Throws Error(GridMismatch) unless both deployments have the same shape.
DeploymentStats deployment_stats(const Deployment& real, const Deployment& synth);

}  // namespace celltrace
