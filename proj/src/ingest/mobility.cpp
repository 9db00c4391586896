#include "celltrace/ingest/mobility.hpp"

#include <vector>

#include "celltrace/core/error.hpp"
#include "celltrace/core/polygon.hpp"

namespace celltrace {

MobilityFlags classify_mobility(const TraceTable& trace, double threshold_m) {
  if (!trace.has_users())
    throw Error(ErrorCode::UsersAbsent,
                "trace has no user ids; mobile/static split is unavailable");

  std::map<std::pair<std::string, std::int64_t>, std::vector<Point>> positions;
  for (const TraceRecord& r : trace.records()) {
    if (r.user_id.empty()) continue;
    positions[{r.user_id, r.slot}].push_back(r.position);
  }

  MobilityFlags flags;
  for (const auto& [key, pts] : positions)
    flags.emplace(key, diameter(pts) > threshold_m ? Mobility::Mobile : Mobility::Static);
  return flags;
}

}  // namespace celltrace
