#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "celltrace/core/types.hpp"

namespace celltrace {

inline constexpr double kRbBandwidthMhz = 0.18;

/// LTE numerology: one RB per 180 kHz, minus configured guard RBs.
int resource_blocks(double bandwidth_mhz, int guard_rbs = 0) noexcept;

struct Band {
  std::string label;
  double center_ghz = 0.0;
  double bandwidth_mhz = 0.0;
  Tier tier = Tier::Macro;
  int guard_rbs = 0;

  int rbs() const noexcept { return resource_blocks(bandwidth_mhz, guard_rbs); }
};

/// Licensed LTE bands per operator. Macro cells use the operator's macro-tier
/// band (its lowest frequency); micro cells use the first micro-tier band.
class SpectrumPlan {
 public:
  explicit SpectrumPlan(std::map<std::string, std::vector<Band>> bands);

  const std::map<std::string, std::vector<Band>>& operators() const noexcept { return bands_; }
  /// Throws Error(MissingTier) for an unknown operator or tier.
  const Band& band_for(const std::string& op, Tier tier) const;

 private:
  std::map<std::string, std::vector<Band>> bands_;
};

/// JSON schema (docs/spectrum.schema.md):
/// {"operators": {"<label>": [{"band": "17", "center_ghz": 0.7,
///   "bandwidth_mhz": 12, "tier": "macro", "guard_rbs": 0}, ...]}}
SpectrumPlan load_spectrum(std::istream& in);
SpectrumPlan load_spectrum(const std::filesystem::path& path);

}  // namespace celltrace
