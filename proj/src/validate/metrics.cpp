#include "celltrace/validate/metrics.hpp"

#include <cmath>

#include "celltrace/core/error.hpp"
#include "celltrace/simd/kernels.hpp"

namespace celltrace {

std::array<double, 24> hourly_profile(const DemandMatrix& m, const SlotCalendar& cal) {
  std::array<double, 24> out{};
  std::vector<double> per_slot(static_cast<std::size_t>(m.slot_count()), 0.0);
  for (std::size_t b = 0; b < m.bs_count(); ++b) {
    const auto row = m.row(b);
    for (std::size_t k = 0; k < row.size(); ++k) per_slot[k] += row[k];
  }
  for (std::int64_t k = 0; k < m.slot_count(); ++k)
    out[static_cast<std::size_t>(cal.at(k).hour)] += per_slot[static_cast<std::size_t>(k)];
  return out;
}

std::vector<double> per_bs_totals(const DemandMatrix& m) {
  std::vector<double> out(m.bs_count());
  for (std::size_t b = 0; b < m.bs_count(); ++b) out[b] = simd::sum(m.row(b));
  return out;
}

double rmse(const DemandMatrix& real, const DemandMatrix& synth, Granularity g,
            const SlotCalendar& cal) {
  if (real.bs_ids() != synth.bs_ids() || real.slot_count() != synth.slot_count())
    throw Error(ErrorCode::IndexMismatch, "demand matrices cover different BSs or slots");
  switch (g) {
    case Granularity::Hour: {
      const auto a = hourly_profile(real, cal);
      const auto b = hourly_profile(synth, cal);
      return std::sqrt(simd::sum_squared_diff(a, b) / 24.0);
    }
    case Granularity::PerBS: {
      if (real.bs_count() == 0) return 0.0;
      const auto a = per_bs_totals(real);
      const auto b = per_bs_totals(synth);
      return std::sqrt(simd::sum_squared_diff(a, b) / static_cast<double>(a.size()));
    }
    case Granularity::PerBSSlot: {
      if (real.values().empty()) return 0.0;
      return std::sqrt(simd::sum_squared_diff(real.values(), synth.values()) /
                       static_cast<double>(real.values().size()));
    }
  }
  return 0.0;
}

}  // namespace celltrace
