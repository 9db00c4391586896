#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "celltrace/radio/capacity.hpp"

namespace celltrace {

enum class StruggleReason : std::uint8_t { Interference, CellEdge, LackOfRBs };
inline constexpr std::size_t kStruggleReasonCount = 3;
std::string_view to_string(StruggleReason r) noexcept;

/// LackOfRBs when SINR > good_sinr_db; otherwise CellEdge when the
/// interference-free SNR < weak_snr_db; otherwise Interference.
/// Throws Error(NotStruggling) unless demand > capacity.
StruggleReason classify_struggle(double sinr_db, double snr_db, double demand_bps,
                                 double capacity_bps, double good_sinr_db = 5.0,
                                 double weak_snr_db = 5.0);

enum class Strategy : std::uint8_t { Mimo, Refarm, Comp, Abs };
std::string_view to_string(Strategy s) noexcept;

struct StrategySpec {
  Strategy kind = Strategy::Mimo;
  double refarm_mhz = 0.0;  // Refarm only
};

/// "mimo,refarm5,refarm10,comp,abs" (any subset, in this order). Listing
/// both refarm amounts runs the stage with the smaller one and reports the
/// larger as a variant. Throws Error(StrategyOrderViolation) for an
/// out-of-order or repeated strategy, Error(ConfigError) for unknown names.
std::vector<StrategySpec> parse_strategies(std::string_view list);

enum class RefarmTier : std::uint8_t { Macro, Micro, Both };

struct HealingOptions {
  double mimo_factor = 3.48;
  /// Spare RBs, as a fraction of a BS's budget, needed to aid or blank.
  double spare_fraction = 0.10;
  double abs_fraction = 0.25;
  /// Consecutive non-beneficial ABS candidates tolerated before stopping.
  int abs_patience = 1;
  RefarmTier refarm_tier = RefarmTier::Both;
  /// Also report ABS healing with every BS forced to K = 1.
  bool abs_k1_variant = true;
  double good_sinr_db = 5.0;
  double weak_snr_db = 5.0;
};

/// Capacity levers accumulated in the cascade order. Applying a strategy
/// out of order, or twice, throws Error(StrategyOrderViolation).
class HealingState {
 public:
  HealingState(const RadioScenario& sc, ReusePlan plan, const ThroughputTable& table,
               std::vector<double> demand_bps, HealingOptions opts = {});

  void apply(const StrategySpec& s);

  const CapacityState& capacity() const noexcept { return state_; }
  const CapacityModifiers& modifiers() const noexcept { return mods_; }
  const ReusePlan& plan() const noexcept { return plan_; }
  /// Same levers evaluated under another reuse plan.
  HealingState with_plan(ReusePlan plan) const;

  std::size_t comp_links() const noexcept;
  std::vector<std::size_t> muted() const;

 private:
  void refresh();
  void apply_comp();
  void apply_abs();

  const RadioScenario* sc_;
  ReusePlan plan_;
  const ThroughputTable* table_;
  std::vector<double> demand_;
  HealingOptions opts_;
  CapacityModifiers mods_;
  CapacityState state_;
  int last_rank_ = -1;
};

struct StageResult {
  std::string name;
  std::size_t struggling_before = 0;
  std::size_t healed = 0;
  double percent = 0.0;  // of struggling_before
  std::array<std::size_t, kStruggleReasonCount> healed_by_reason{};
  std::size_t newly_struggling = 0;
};

struct LocationOutcome {
  std::size_t location = 0;
  double demand_bps = 0.0;
  double capacity_bps = 0.0;  // before healing
  double sinr_db = 0.0;
  double snr_db = 0.0;
  StruggleReason reason = StruggleReason::Interference;
  int healed_stage = -1;  // index into stages, -1 for residual
};

struct HealingLedger {
  std::size_t struggling = 0;
  std::array<std::size_t, kStruggleReasonCount> by_reason{};
  std::vector<StageResult> stages;
  /// Side results not carried forward: larger refarm amount, ABS at K = 1.
  std::vector<StageResult> variants;
  std::vector<LocationOutcome> locations;  // baseline struggling locations
  std::vector<std::size_t> residual;
  std::vector<std::size_t> muted;
  std::size_t comp_links = 0;
  std::vector<std::size_t> struggling_after;  // per stage, sizes
};

/// Classifies the baseline struggling locations, then applies the
/// strategies in order and records what each stage heals.
HealingLedger heal_cascade(const RadioScenario& sc, const ReusePlan& plan,
                           const ThroughputTable& table, const std::vector<double>& demand_bps,
                           const std::vector<StrategySpec>& strategies,
                           const HealingOptions& opts = {});

}  // namespace celltrace
