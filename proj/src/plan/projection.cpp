#include "celltrace/plan/projection.hpp"

#include <cmath>

#include "celltrace/core/error.hpp"

namespace celltrace {

void Projection::validate() const {
  if (!(horizon_years >= 0.0)) throw Error(ErrorCode::ConfigError, "horizon must be >= 0");
  for (double r : {cagr_mobile, cagr_static, cagr_combined})
    if (!(r > -1.0)) throw Error(ErrorCode::ConfigError, "growth rates must exceed -1");
}

double Projection::factor(MobilityClass m) const {
  validate();
  const double r = m == MobilityClass::Mobile   ? cagr_mobile
                   : m == MobilityClass::Static ? cagr_static
                                                : cagr_combined;
  return std::pow(1.0 + r, horizon_years);
}

std::vector<double> project_demand(std::span<const LocationDemand> demand, const Projection& p,
                                   bool use_mobility) {
  p.validate();
  std::vector<double> out;
  out.reserve(demand.size());
  for (const LocationDemand& d : demand) {
    double v = 0.0;
    for (std::size_t m = 0; m < kMobilityClassCount; ++m) {
      const MobilityClass cls = use_mobility ? static_cast<MobilityClass>(m) : MobilityClass::Unknown;
      const double base = d.lte_bps[m] + (p.include_3g ? d.g3_bps[m] : 0.0);
      v += base * p.factor(cls);
    }
    out.push_back(v);
  }
  return out;
}

DemandMatrix project_demand(const DemandMatrix& peak, const Projection& p,
                            std::span<const MobilityClass> row_class) {
  p.validate();
  if (!row_class.empty() && row_class.size() != peak.bs_count())
    throw Error(ErrorCode::IndexMismatch, "one mobility class per row is required");
  DemandMatrix out = peak;
  for (std::size_t b = 0; b < out.bs_count(); ++b) {
    const double f = p.factor(row_class.empty() ? MobilityClass::Unknown : row_class[b]);
    for (std::int64_t k = 0; k < out.slot_count(); ++k) out.at(b, k) *= f;
  }
  return out;
}

}  // namespace celltrace
