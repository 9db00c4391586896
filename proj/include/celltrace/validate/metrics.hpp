#pragma once

#include <array>
#include <vector>

#include "celltrace/core/calendar.hpp"
#include "celltrace/demand/demand_matrix.hpp"

namespace celltrace {

enum class Granularity : std::uint8_t { Hour, PerBS, PerBSSlot };

/// Delta(h) = sum over BSs and slots k with Hour(k) = h.
std::array<double, 24> hourly_profile(const DemandMatrix& m, const SlotCalendar& cal);

/// Delta(b) = sum over slots of row b.
std::vector<double> per_bs_totals(const DemandMatrix& m);

/// Root-mean-square error at the given granularity. Both matrices must list
/// the same BS ids and slot count; throws Error(IndexMismatch) otherwise.
double rmse(const DemandMatrix& real, const DemandMatrix& synth, Granularity g,
            const SlotCalendar& cal);

}  // namespace celltrace
