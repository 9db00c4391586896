#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "celltrace/core/calendar.hpp"
#include "celltrace/core/random.hpp"
#include "celltrace/core/types.hpp"
#include "celltrace/demand/demand_matrix.hpp"

namespace celltrace {

/// Calendar part of a demand state.
enum class TimeKeying : std::uint8_t {
  DowHour,  // (day of week, hour): 168 periods
  Hour,     // hour of day: 24 periods
  None,     // time-homogeneous chain
};

int period_count(TimeKeying k) noexcept;
std::string_view to_string(TimeKeying k) noexcept;

struct MarkovOptions {
  TimeKeying keying = TimeKeying::DowHour;
  /// Number of demand levels; 101 keeps every integer delta in [0, 100].
  int levels = 101;
};

/// s = (area, time, level). `time` indexes the keying's periods; the
/// successor of time t is (t + 1) mod periods.
struct MarkovState {
  AreaType area = AreaType::Urban;
  int time = 0;
  int level = 0;

  friend auto operator<=>(const MarkovState&, const MarkovState&) = default;
  friend bool operator==(const MarkovState&, const MarkovState&) = default;
};

struct TransitionMetadata {
  std::string trace_id;
  std::uint64_t seed = 0;
};

/// Sparse transition counters ctr(s_i, s_j). Successors always sit at the
/// next time period in the same area, so each counter row is keyed by the
/// successor level only. Probabilities are ctr / row total.
class TransitionModel {
 public:
  explicit TransitionModel(MarkovOptions opts = {});

  const MarkovOptions& options() const noexcept { return opts_; }
  TransitionMetadata& metadata() noexcept { return meta_; }
  const TransitionMetadata& metadata() const noexcept { return meta_; }

  int level_of(double delta) const noexcept;
  double delta_of(int level) const noexcept;
  int time_of(const SlotCalendar& cal, std::int64_t slot) const noexcept;
  int next_time(int time) const noexcept { return (time + 1) % period_count(opts_.keying); }

  void add_transition(const MarkovState& from, int to_level, std::uint64_t n = 1);
  void add_observation(const MarkovState& s, std::uint64_t n = 1);
  void mark_area(AreaType a) { areas_[static_cast<std::size_t>(a)] = true; }
  bool has_area(AreaType a) const noexcept { return areas_[static_cast<std::size_t>(a)]; }

  using Row = std::map<int, std::uint64_t>;  // successor level -> count
  const std::map<MarkovState, Row>& transitions() const noexcept { return ctr_; }
  /// Level counts per (area, time, *): the marginal used for initial states
  /// and for unseen-state fallback.
  const std::map<MarkovState, Row>& marginals() const noexcept { return marginal_; }

  std::uint64_t count(const MarkovState& from, int to_level) const noexcept;
  /// p(s_i, s_j); 0 for unseen s_i.
  double probability(const MarkovState& from, int to_level) const noexcept;
  /// Successor distribution as (level, probability), ascending level.
  std::vector<std::pair<int, double>> distribution(const MarkovState& from) const;
  std::size_t state_count() const noexcept { return ctr_.size(); }

  void to_json(std::ostream& out) const;
  static TransitionModel from_json(std::istream& in);

 private:
  MarkovOptions opts_;
  TransitionMetadata meta_;
  std::map<MarkovState, Row> ctr_;
  std::map<MarkovState, Row> marginal_;
  bool areas_[kAreaTypeCount] = {false, false, false};
};

/// Counts every consecutive-slot pair of every non-flagged BS row. `areas`
/// gives A(b) per row. Throws Error(EmptyTrace) with fewer than two slots or
/// no usable row.
TransitionModel train_demand(const DemandMatrix& delta, std::span<const AreaType> areas,
                             const SlotCalendar& calendar, const MarkovOptions& opts = {});

/// Draws a successor level of `from` proportionally to its counts.
int sample_row(const TransitionModel::Row& row, Rng& rng);

struct GenerationStats {
  std::size_t unseen_states = 0;       // marginal fallback used
  std::size_t held_values = 0;         // marginal empty too, previous kept
  std::size_t initial_fallbacks = 0;   // no marginal at slot 0 for the area/time
};

/// One self-feeding path per BS starting at `calendar` slot 0. The initial
/// level is drawn from the marginal at slot 0. Each BS draws from its own
/// stream derive_seed(seed, row index). Throws Error(ModelAreaMissing) if a
/// BS's area type was never trained.
DemandMatrix generate_demand(const TransitionModel& model, const std::vector<std::string>& bs_ids,
                             std::span<const AreaType> areas, std::int64_t slots,
                             const SlotCalendar& calendar, std::uint64_t seed,
                             GenerationStats* stats = nullptr);

}  // namespace celltrace
