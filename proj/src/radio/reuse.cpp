#include "celltrace/radio/reuse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace celltrace {

ReuseObjective reuse_objective(const RadioScenario& sc, const ReusePlan& plan,
                               const ThroughputTable& table,
                               const std::vector<double>& demand_bps, double min_sinr_db) {
  const CapacityState st = evaluate_capacity(sc, plan, table, demand_bps);
  ReuseObjective o;
  for (std::size_t l = 0; l < st.location_count(); ++l) {
    if (sc.serving()[l] >= 0 && st.sinr_db[l] >= min_sinr_db) ++o.served;
    o.throughput_bps += st.capacity_bps[l];
  }
  return o;
}

int least_interfered_sub_band(const RadioScenario& sc, const ReusePlan& plan, std::size_t b) {
  double cost[3] = {0.0, 0.0, 0.0};
  for (std::size_t j = 0; j < sc.bs_count(); ++j) {
    if (j == b || plan[j].k != 3 || sc.tier(j) != sc.tier(b)) continue;
    for (std::size_t l = 0; l < sc.location_count(); ++l)
      if (sc.covers(b, l)) cost[plan[j].sub_band] += sc.rx_mw(j, l);
  }
  int best = 0;
  for (int i = 1; i < 3; ++i)
    if (cost[i] < cost[best]) best = i;
  return best;
}

ReuseResult optimize_reuse(const RadioScenario& sc, const ThroughputTable& table,
                           const std::vector<double>& demand_bps, const ReuseOptions& opts) {
  ReuseResult res;
  res.plan = reuse_one(sc.bs_count());
  const CapacityState base = evaluate_capacity(sc, res.plan, table, demand_bps);
  res.baseline = reuse_objective(sc, res.plan, table, demand_bps, opts.min_sinr_db);
  res.final_objective = res.baseline;
  ++res.evaluations;

  // Areas by ascending minimum baseline SINR; uncovered locations do not
  // count towards the minimum.
  std::map<std::pair<long, long>, std::vector<std::size_t>> blocks;
  for (std::size_t l = 0; l < sc.location_count(); ++l) {
    const Point p = sc.locations()[l].position;
    blocks[{static_cast<long>(std::floor(p.y / opts.area_block_m)),
            static_cast<long>(std::floor(p.x / opts.area_block_m))}]
        .push_back(l);
  }
  struct Area {
    double min_sinr;
    std::vector<std::size_t> bss;
  };
  std::vector<Area> areas;
  for (const auto& [key, locs] : blocks) {
    Area a{std::numeric_limits<double>::infinity(), {}};
    std::vector<bool> seen(sc.bs_count(), false);
    for (std::size_t l : locs) {
      if (sc.serving()[l] >= 0) a.min_sinr = std::min(a.min_sinr, base.sinr_db[l]);
      for (std::size_t b = 0; b < sc.bs_count(); ++b)
        if (!seen[b] && sc.covers(b, l)) {
          seen[b] = true;
          a.bss.push_back(b);
        }
    }
    std::stable_sort(a.bss.begin(), a.bss.end(), [&](std::size_t x, std::size_t y) {
      return sc.coverage_count(x) > sc.coverage_count(y);
    });
    areas.push_back(std::move(a));
  }
  std::stable_sort(areas.begin(), areas.end(),
                   [](const Area& x, const Area& y) { return x.min_sinr < y.min_sinr; });

  for (;;) {
    ++res.sweeps;
    bool accepted = false;
    for (const Area& area : areas) {
      for (std::size_t b : area.bss) {
        if (res.plan[b].k != 1) continue;
        ReusePlan trial = res.plan;
        trial[b] = {3, least_interfered_sub_band(sc, res.plan, b)};
        const ReuseObjective o = reuse_objective(sc, trial, table, demand_bps, opts.min_sinr_db);
        ++res.evaluations;
        if (o.better_than(res.final_objective)) {
          res.plan = std::move(trial);
          res.final_objective = o;
          res.trajectory.push_back(o);
          accepted = true;
        }
      }
    }
    if (!accepted || (opts.max_sweeps > 0 && res.sweeps >= opts.max_sweeps)) break;
  }
  return res;
}

}  // namespace celltrace
