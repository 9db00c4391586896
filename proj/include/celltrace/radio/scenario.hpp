#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "celltrace/core/types.hpp"
#include "celltrace/ingest/spectrum.hpp"
#include "celltrace/radio/propagation.hpp"

namespace celltrace {

struct RadioConfig {
  double ue_height_m = kUeHeightM;
  double noise_figure_db = 9.0;
  /// Gain outside the sector's main lobe (+-beamwidth/2); inside it is 0 dB.
  double sector_side_lobe_db = -25.0;
  /// Coverage radius for BSs without a coverage polygon.
  double macro_radius_m = 3000.0;
  double micro_radius_m = 1000.0;
  /// Distances below this are clamped before the path-loss formulas.
  double min_distance_m = 1.0;
  /// Keys the per-(BS, location) LOS draws of micro links.
  std::uint64_t los_seed = 0;
};

/// A point at which SINR and capacity are evaluated. `key` identifies the
/// point across scenarios (e.g. its analysis-raster index) so that random
/// LOS draws do not depend on which other points are evaluated.
struct Location {
  Point position;
  std::uint64_t key = 0;
};

struct ReuseAssignment {
  int k = 1;         // 1 or 3
  int sub_band = 0;  // < k

  friend bool operator==(const ReuseAssignment&, const ReuseAssignment&) = default;
};
using ReusePlan = std::vector<ReuseAssignment>;

inline ReusePlan reuse_one(std::size_t n) { return ReusePlan(n); }

/// Share of the victim's band occupied by the interferer's sub-band.
double band_overlap(const ReuseAssignment& interferer, const ReuseAssignment& victim) noexcept;

/// Received powers of one operator's BSs at a set of locations. BSs of the
/// same tier share that tier's band and interfere with each other; the two
/// tiers never interfere.
class RadioScenario {
 public:
  /// Throws Error(MissingTier) if a BS's operator lacks the band of its tier,
  /// Error(InvalidArgument) if the BSs belong to several operators.
  RadioScenario(std::vector<BaseStation> stations, const SpectrumPlan& spectrum,
                std::vector<Location> locations, const RadioConfig& config = {});

  std::size_t bs_count() const noexcept { return stations_.size(); }
  std::size_t location_count() const noexcept { return locations_.size(); }
  const std::vector<BaseStation>& stations() const noexcept { return stations_; }
  const std::vector<Location>& locations() const noexcept { return locations_; }
  const RadioConfig& config() const noexcept { return config_; }
  const Band& band(std::size_t b) const noexcept { return bands_[b]; }
  Tier tier(std::size_t b) const noexcept { return tier_of(stations_[b].cls); }

  double rx_dbm(std::size_t b, std::size_t l) const noexcept { return rx_dbm_[b * L() + l]; }
  double rx_mw(std::size_t b, std::size_t l) const noexcept { return rx_mw_[b * L() + l]; }
  std::span<const double> rx_mw_row(std::size_t b) const noexcept {
    return {rx_mw_.data() + b * L(), L()};
  }
  bool covers(std::size_t b, std::size_t l) const noexcept { return cover_[b * L() + l] != 0; }
  bool los(std::size_t b, std::size_t l) const noexcept { return los_[b * L() + l] != 0; }

  /// Strongest covering BS per location, -1 where none covers.
  const std::vector<std::int32_t>& serving() const noexcept { return serving_; }
  /// Noise power over the full band of BS b's tier, in mW.
  double noise_mw(std::size_t b) const noexcept { return noise_mw_[b]; }
  /// Locations covered by BS b.
  std::size_t coverage_count(std::size_t b) const noexcept { return coverage_count_[b]; }

 private:
  std::size_t L() const noexcept { return locations_.size(); }

  std::vector<BaseStation> stations_;
  std::vector<Location> locations_;
  RadioConfig config_;
  std::vector<Band> bands_;
  std::vector<double> rx_dbm_;
  std::vector<double> rx_mw_;
  std::vector<std::uint8_t> cover_;
  std::vector<std::uint8_t> los_;
  std::vector<std::int32_t> serving_;
  std::vector<double> noise_mw_;
  std::vector<std::size_t> coverage_count_;
};

/// Antenna gain (dB) of `bs` towards `p`.
double antenna_gain_db(const BaseStation& bs, Point p, double side_lobe_db) noexcept;

/// Per-location conditions under a plan. `extra_signal` and `excluded`
/// describe optional cooperation: an aiding BS adds its power to the signal
/// and no longer interferes. `muted` BSs neither serve nor interfere.
struct LinkConditions {
  std::vector<double> signal_mw;
  std::vector<double> interference_mw;
  std::vector<double> noise_mw;

  double sinr_db(std::size_t l) const noexcept;
  double snr_db(std::size_t l) const noexcept;
};

struct InterferenceOptions {
  std::span<const std::int32_t> aider;    // per location, -1 none; may be empty
  std::span<const std::uint8_t> muted;    // per BS; may be empty
};

LinkConditions link_conditions(const RadioScenario& sc, const ReusePlan& plan,
                               const InterferenceOptions& opts = {});

/// Per-location SINR raster for output. `sinr_db` is NaN where no BS covers.
struct SinrField {
  std::vector<std::int32_t> serving;
  std::vector<double> sinr_db;
  std::vector<double> snr_db;
  std::size_t uncovered = 0;  // NoCoverage locations
};

SinrField compute_sinr(const RadioScenario& sc, const ReusePlan& plan);

}  // namespace celltrace
