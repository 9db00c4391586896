#include "celltrace/validate/deploy_stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "celltrace/core/error.hpp"

namespace celltrace {

EmpiricalCdf empirical_cdf(std::span<const std::int64_t> sample) {
  std::vector<std::int64_t> v(sample.begin(), sample.end());
  std::sort(v.begin(), v.end());
  EmpiricalCdf out;
  const double n = static_cast<double>(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i + 1 == v.size() || v[i + 1] != v[i])
      out.emplace_back(v[i], static_cast<double>(i + 1) / n);
  return out;
}

double ks_distance(const EmpiricalCdf& f, const EmpiricalCdf& g) {
  double worst = 0.0, fv = 0.0, gv = 0.0;
  std::size_t i = 0, j = 0;
  while (i < f.size() || j < g.size()) {
    const std::int64_t x = j == g.size() || (i < f.size() && f[i].first <= g[j].first)
                               ? f[i].first
                               : g[j].first;
    if (i < f.size() && f[i].first == x) fv = f[i++].second;
    if (j < g.size() && g[j].first == x) gv = g[j++].second;
    worst = std::max(worst, std::abs(fv - gv));
  }
  return worst;
}

std::vector<std::int64_t> neighborhood_sums(const Deployment& d) {
  std::vector<std::int64_t> out(d.size(), 0);
  std::vector<std::size_t> nb;
  for (std::size_t i = 0; i < d.size(); ++i) {
    d.neighbors(i, nb);
    for (std::size_t v : nb) out[i] += d[v];
  }
  return out;
}

namespace {

double mean(std::span<const std::int64_t> v) {
  if (v.empty()) return 0.0;
  return static_cast<double>(std::accumulate(v.begin(), v.end(), std::int64_t{0})) /
         static_cast<double>(v.size());
}

}  // namespace

DeploymentStats deployment_stats(const Deployment& real, const Deployment& synth) {
  if (real.rows() != synth.rows() || real.cols() != synth.cols())
    throw Error(ErrorCode::GridMismatch, "deployments differ in shape");
  const std::vector<std::int64_t> rt(real.counts().begin(), real.counts().end());
  const std::vector<std::int64_t> st(synth.counts().begin(), synth.counts().end());
  const auto rn = neighborhood_sums(real);
  const auto sn = neighborhood_sums(synth);
  DeploymentStats s;
  s.real_tile = empirical_cdf(rt);
  s.synth_tile = empirical_cdf(st);
  s.real_neigh = empirical_cdf(rn);
  s.synth_neigh = empirical_cdf(sn);
  s.real_tile_mean = mean(rt);
  s.synth_tile_mean = mean(st);
  s.real_neigh_mean = mean(rn);
  s.synth_neigh_mean = mean(sn);
  s.ks_tile = ks_distance(s.real_tile, s.synth_tile);
  s.ks_neigh = ks_distance(s.real_neigh, s.synth_neigh);
  return s;
}

}  // namespace celltrace
