#include "celltrace/radio/capacity.hpp"

#include <cmath>
#include <limits>

#include "celltrace/core/error.hpp"

namespace celltrace {

std::vector<std::size_t> CapacityState::struggling_set() const {
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < location_count(); ++l)
    if (struggling(l)) out.push_back(l);
  return out;
}

CapacityState evaluate_capacity(const RadioScenario& sc, const ReusePlan& plan,
                                const ThroughputTable& table,
                                const std::vector<double>& demand_bps,
                                const CapacityModifiers& mods) {
  const std::size_t B = sc.bs_count(), N = sc.location_count();
  if (demand_bps.size() != N)
    throw Error(ErrorCode::IndexMismatch, "one demand value per location is required");
  const auto& serving = sc.serving();

  InterferenceOptions io;
  io.aider = mods.comp_aider;
  const LinkConditions normal = link_conditions(sc, plan, io);
  bool any_muted = false;
  for (std::uint8_t m : mods.abs_muted) any_muted = any_muted || m;
  LinkConditions blanked;
  if (any_muted) {
    io.muted = mods.abs_muted;
    blanked = link_conditions(sc, plan, io);
  }

  CapacityState st;
  st.demand_bps = demand_bps;
  st.sinr_db.resize(N);
  st.snr_db.resize(N);
  st.rate_per_rb.assign(N, 0.0);
  st.capacity_bps.assign(N, 0.0);
  st.share.assign(N, 0.0);
  st.rb_budget.resize(B);
  st.rb_allocated.assign(B, 0.0);
  for (std::size_t b = 0; b < B; ++b) {
    const double extra = mods.extra_rbs.empty() ? 0.0 : mods.extra_rbs[b];
    st.rb_budget[b] = (sc.band(b).rbs() + extra) / plan[b].k;
  }

  std::vector<double> served_demand(B, 0.0);
  for (std::size_t l = 0; l < N; ++l) {
    if (serving[l] < 0 || demand_bps[l] <= 0.0) continue;
    served_demand[static_cast<std::size_t>(serving[l])] += demand_bps[l];
  }

  const double f = any_muted ? mods.abs_fraction : 0.0;
  for (std::size_t l = 0; l < N; ++l) {
    st.sinr_db[l] = normal.sinr_db(l);
    st.snr_db[l] = normal.snr_db(l);
    if (serving[l] < 0) continue;
    const auto s = static_cast<std::size_t>(serving[l]);
    double rate = (1.0 - f) * table.per_rb(st.sinr_db[l], mods.mimo_factor);
    if (any_muted && blanked.signal_mw[l] > 0.0)
      rate += f * table.per_rb(blanked.sinr_db(l), mods.mimo_factor);
    st.rate_per_rb[l] = rate;
    st.share[l] = demand_bps[l] > 0.0 ? demand_bps[l] / served_demand[s] : 0.0;
    st.capacity_bps[l] = st.rb_budget[s] * rate * st.share[l];
    if (demand_bps[l] > 0.0) {
      st.rb_allocated[s] += rate > 0.0 ? std::min(demand_bps[l] / rate, st.rb_budget[s] * st.share[l])
                                       : st.rb_budget[s] * st.share[l];
    }
  }
  for (std::size_t b = 0; b < B && !mods.comp_debit_rbs.empty(); ++b)
    st.rb_allocated[b] += mods.comp_debit_rbs[b];
  return st;
}

std::vector<double> pressure(const CapacityState& st) {
  std::vector<double> out(st.location_count(), 0.0);
  for (std::size_t l = 0; l < out.size(); ++l) {
    if (st.demand_bps[l] <= 0.0) continue;
    out[l] = st.capacity_bps[l] > 0.0 ? st.demand_bps[l] / st.capacity_bps[l]
                                      : std::numeric_limits<double>::infinity();
  }
  return out;
}

}  // namespace celltrace
