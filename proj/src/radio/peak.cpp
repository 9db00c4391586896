#include "celltrace/radio/peak.hpp"

#include <map>
#include <tuple>

namespace celltrace {

std::vector<CellPeak> combined_peak(const TraceTable& trace) {
  std::vector<CellPeak> out;
  const auto& recs = trace.records();
  for (const auto& [key, idx] : trace.by_cell()) {
    for (Tech tech : {Tech::LTE, Tech::G3}) {
      std::map<std::int64_t, std::int64_t> per_slot;
      for (std::size_t i : idx)
        if (recs[i].tech == tech) per_slot[recs[i].slot] += recs[i].bytes_down;
      if (per_slot.empty()) continue;
      CellPeak p{key, tech, per_slot.begin()->first, per_slot.begin()->second};
      for (const auto& [slot, bytes] : per_slot)
        if (bytes > p.bytes) {
          p.slot = slot;
          p.bytes = bytes;
        }
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<LocationDemand> peak_location_demand(const TraceTable& trace, const Grid& grid,
                                                 const std::vector<CellPeak>& peaks,
                                                 const MobilityFlags* mobility) {
  std::map<std::pair<std::string, RasterCell>, LocationDemand> acc;
  const auto& recs = trace.records();
  for (const CellPeak& p : peaks) {
    const auto it = trace.by_cell().find(p.key);
    if (it == trace.by_cell().end()) continue;
    for (std::size_t i : it->second) {
      const TraceRecord& r = recs[i];
      if (r.tech != p.tech || r.slot != p.slot) continue;
      const RasterCell c = grid.to_analysis_cell(r.position);
      LocationDemand& d = acc[{r.op, c}];
      d.op = r.op;
      d.cell = c;
      MobilityClass m = MobilityClass::Unknown;
      if (mobility) {
        const auto f = mobility->find({r.user_id, r.slot});
        if (f != mobility->end())
          m = f->second == Mobility::Mobile ? MobilityClass::Mobile : MobilityClass::Static;
      }
      const double bps = static_cast<double>(r.bytes_down) * kBytesPerSlotToBps;
      (r.tech == Tech::LTE ? d.lte_bps : d.g3_bps)[static_cast<std::size_t>(m)] += bps;
    }
  }
  std::vector<LocationDemand> out;
  out.reserve(acc.size());
  for (auto& [k, d] : acc) out.push_back(std::move(d));
  return out;
}

}  // namespace celltrace
