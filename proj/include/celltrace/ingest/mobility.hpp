#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "celltrace/ingest/trace.hpp"

namespace celltrace {

enum class Mobility : std::uint8_t { Static, Mobile };

inline constexpr double kMobilityThresholdM = 1000.0;

using MobilityFlags = std::map<std::pair<std::string, std::int64_t>, Mobility>;

/// A user is Mobile within a slot when the largest displacement between any
/// two of its reported positions in that slot exceeds `threshold_m`.
/// Throws Error(UsersAbsent) when the trace carries no user ids.
MobilityFlags classify_mobility(const TraceTable& trace,
                                double threshold_m = kMobilityThresholdM);

}  // namespace celltrace
