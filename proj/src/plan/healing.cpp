#include "celltrace/plan/healing.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "celltrace/core/error.hpp"
#include "celltrace/ingest/csv.hpp"
#include "celltrace/ingest/spectrum.hpp"

namespace celltrace {

std::string_view to_string(StruggleReason r) noexcept {
  switch (r) {
    case StruggleReason::Interference: return "interference";
    case StruggleReason::CellEdge: return "cell_edge";
    case StruggleReason::LackOfRBs: return "lack_of_rbs";
  }
  return "?";
}

std::string_view to_string(Strategy s) noexcept {
  switch (s) {
    case Strategy::Mimo: return "mimo";
    case Strategy::Refarm: return "refarm";
    case Strategy::Comp: return "comp";
    case Strategy::Abs: return "abs";
  }
  return "?";
}

StruggleReason classify_struggle(double sinr_db, double snr_db, double demand_bps,
                                 double capacity_bps, double good_sinr_db, double weak_snr_db) {
  if (!(demand_bps > capacity_bps))
    throw Error(ErrorCode::NotStruggling, "location demand does not exceed its capacity");
  if (sinr_db > good_sinr_db) return StruggleReason::LackOfRBs;
  if (!(snr_db >= weak_snr_db)) return StruggleReason::CellEdge;
  return StruggleReason::Interference;
}

std::vector<StrategySpec> parse_strategies(std::string_view list) {
  std::vector<StrategySpec> out;
  int last = -1;
  double last_refarm = 0.0;
  for (const std::string& raw : csv::split_line(list)) {
    std::string name;
    for (char c : raw)
      if (c != ' ') name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (name.empty()) continue;
    StrategySpec s;
    if (name == "mimo") {
      s.kind = Strategy::Mimo;
    } else if (name.rfind("refarm", 0) == 0) {
      s.kind = Strategy::Refarm;
      const auto mhz = csv::parse_number<double>(std::string_view(name).substr(6));
      if (!mhz || *mhz <= 0.0)
        throw Error(ErrorCode::ConfigError, "refarm needs a positive amount, e.g. refarm5");
      s.refarm_mhz = *mhz;
    } else if (name == "comp") {
      s.kind = Strategy::Comp;
    } else if (name == "abs") {
      s.kind = Strategy::Abs;
    } else {
      throw Error(ErrorCode::ConfigError, "unknown strategy '" + name + "'");
    }
    const int rank = static_cast<int>(s.kind);
    const bool second_refarm = s.kind == Strategy::Refarm && rank == last && s.refarm_mhz > last_refarm;
    if (rank < last || (rank == last && !second_refarm))
      throw Error(ErrorCode::StrategyOrderViolation,
                  "strategies must follow mimo, refarm, comp, abs, each once");
    if (s.kind == Strategy::Refarm) last_refarm = s.refarm_mhz;
    last = rank;
    out.push_back(s);
  }
  return out;
}

HealingState::HealingState(const RadioScenario& sc, ReusePlan plan, const ThroughputTable& table,
                           std::vector<double> demand_bps, HealingOptions opts)
    : sc_(&sc), plan_(std::move(plan)), table_(&table), demand_(std::move(demand_bps)),
      opts_(opts) {
  mods_.extra_rbs.assign(sc.bs_count(), 0.0);
  mods_.comp_aider.assign(sc.location_count(), -1);
  mods_.comp_debit_rbs.assign(sc.bs_count(), 0.0);
  mods_.abs_muted.assign(sc.bs_count(), 0);
  mods_.abs_fraction = opts.abs_fraction;
  refresh();
}

void HealingState::refresh() {
  state_ = evaluate_capacity(*sc_, plan_, *table_, demand_, mods_);
}

HealingState HealingState::with_plan(ReusePlan plan) const {
  HealingState copy = *this;
  copy.plan_ = std::move(plan);
  copy.refresh();
  return copy;
}

std::size_t HealingState::comp_links() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(mods_.comp_aider.begin(), mods_.comp_aider.end(), [](auto a) { return a >= 0; }));
}

std::vector<std::size_t> HealingState::muted() const {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < mods_.abs_muted.size(); ++b)
    if (mods_.abs_muted[b]) out.push_back(b);
  return out;
}

void HealingState::apply(const StrategySpec& s) {
  const int rank = static_cast<int>(s.kind);
  if (rank <= last_rank_)
    throw Error(ErrorCode::StrategyOrderViolation,
                std::string("cannot apply ") + std::string(to_string(s.kind)) + " at this point");
  last_rank_ = rank;
  switch (s.kind) {
    case Strategy::Mimo:
      mods_.mimo_factor = opts_.mimo_factor;
      break;
    case Strategy::Refarm: {
      const double rbs = std::floor(s.refarm_mhz / kRbBandwidthMhz + 1e-9);
      for (std::size_t b = 0; b < sc_->bs_count(); ++b) {
        const Tier t = sc_->tier(b);
        if (opts_.refarm_tier == RefarmTier::Both ||
            (opts_.refarm_tier == RefarmTier::Macro && t == Tier::Macro) ||
            (opts_.refarm_tier == RefarmTier::Micro && t == Tier::Micro))
          mods_.extra_rbs[b] += rbs;
      }
      break;
    }
    case Strategy::Comp:
      apply_comp();
      break;
    case Strategy::Abs:
      apply_abs();
      break;
  }
  refresh();
}

void HealingState::apply_comp() {
  const RadioScenario& sc = *sc_;
  InterferenceOptions io;
  io.aider = mods_.comp_aider;
  io.muted = mods_.abs_muted;
  const LinkConditions lc = link_conditions(sc, plan_, io);
  std::vector<double> spare(sc.bs_count());
  for (std::size_t b = 0; b < sc.bs_count(); ++b) spare[b] = state_.spare_rbs(b);

  for (std::size_t l : state_.struggling_set()) {
    const std::int32_t s32 = sc.serving()[l];
    if (s32 < 0 || mods_.comp_aider[l] >= 0) continue;
    const auto s = static_cast<std::size_t>(s32);
    std::int32_t best = -1;
    for (std::size_t a = 0; a < sc.bs_count(); ++a) {
      if (a == s || !sc.covers(a, l) || sc.tier(a) != sc.tier(s) || mods_.abs_muted[a]) continue;
      if (band_overlap(plan_[a], plan_[s]) <= 0.0) continue;
      if (spare[a] < opts_.spare_fraction * state_.rb_budget[a]) continue;
      if (best < 0 || sc.rx_dbm(a, l) > sc.rx_dbm(static_cast<std::size_t>(best), l))
        best = static_cast<std::int32_t>(a);
    }
    if (best < 0) continue;
    const auto a = static_cast<std::size_t>(best);
    const double w = band_overlap(plan_[a], plan_[s]);
    const double sig = lc.signal_mw[l] + w * sc.rx_mw(a, l);
    const double intf = std::max(0.0, lc.interference_mw[l] - w * sc.rx_mw(a, l));
    const double rate = table_->per_rb(linear_to_db(sig / (lc.noise_mw[l] + intf)), mods_.mimo_factor);
    if (rate <= 0.0) continue;
    const double cap = state_.rb_budget[s] * rate * state_.share[l];
    const double debit = std::min(demand_[l], cap) / rate;
    if (debit > spare[a]) continue;
    spare[a] -= debit;
    mods_.comp_aider[l] = best;
    mods_.comp_debit_rbs[a] += debit;
  }
}

void HealingState::apply_abs() {
  const RadioScenario& sc = *sc_;
  const auto struggling = state_.struggling_set();
  if (struggling.empty()) return;

  // Interference each BS contributes to the struggling locations.
  std::vector<double> score(sc.bs_count(), 0.0);
  for (std::size_t l : struggling) {
    const std::int32_t s32 = sc.serving()[l];
    if (s32 < 0) continue;
    const auto s = static_cast<std::size_t>(s32);
    for (std::size_t j = 0; j < sc.bs_count(); ++j) {
      if (j == s || mods_.comp_aider[l] == static_cast<std::int32_t>(j) || sc.tier(j) != sc.tier(s))
        continue;
      score[j] += band_overlap(plan_[j], plan_[s]) * sc.rx_mw(j, l);
    }
  }
  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < sc.bs_count(); ++j)
    if (score[j] > 0.0 && !mods_.abs_muted[j]) order.push_back(j);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return score[x] > score[y]; });

  std::vector<std::size_t> current = struggling;
  int misses = 0;
  for (std::size_t j : order) {
    if (state_.spare_rbs(j) < opts_.spare_fraction * state_.rb_budget[j]) continue;
    CapacityModifiers trial = mods_;
    trial.abs_muted[j] = 1;
    CapacityState st = evaluate_capacity(sc, plan_, *table_, demand_, trial);
    const auto next = st.struggling_set();
    const bool subset = std::includes(current.begin(), current.end(), next.begin(), next.end());
    if (subset && next.size() < current.size()) {
      mods_ = std::move(trial);
      state_ = std::move(st);
      current = next;
      misses = 0;
      if (current.empty()) break;
    } else if (++misses >= opts_.abs_patience) {
      break;
    }
  }
}

namespace {

std::vector<std::size_t> set_minus(const std::vector<std::size_t>& a,
                                   const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

StageResult stage_result(std::string name, const std::vector<std::size_t>& before,
                         const std::vector<std::size_t>& after,
                         const std::map<std::size_t, StruggleReason>& reason) {
  StageResult r;
  r.name = std::move(name);
  r.struggling_before = before.size();
  const auto healed = set_minus(before, after);
  r.healed = healed.size();
  r.newly_struggling = set_minus(after, before).size();
  r.percent = before.empty() ? 0.0 : 100.0 * static_cast<double>(r.healed) /
                                         static_cast<double>(before.size());
  for (std::size_t l : healed) {
    const auto it = reason.find(l);
    if (it != reason.end()) ++r.healed_by_reason[static_cast<std::size_t>(it->second)];
  }
  return r;
}

std::string stage_name(const StrategySpec& s) {
  if (s.kind != Strategy::Refarm) return std::string(to_string(s.kind));
  std::ostringstream os;
  os << "refarm" << s.refarm_mhz;
  return os.str();
}

}  // namespace

HealingLedger heal_cascade(const RadioScenario& sc, const ReusePlan& plan,
                           const ThroughputTable& table, const std::vector<double>& demand_bps,
                           const std::vector<StrategySpec>& strategies,
                           const HealingOptions& opts) {
  HealingState hs(sc, plan, table, demand_bps, opts);
  HealingLedger ledger;
  const CapacityState& base = hs.capacity();
  std::vector<std::size_t> current = base.struggling_set();
  std::map<std::size_t, StruggleReason> reason;
  for (std::size_t l : current) {
    const StruggleReason r = classify_struggle(base.sinr_db[l], base.snr_db[l], base.demand_bps[l],
                                               base.capacity_bps[l], opts.good_sinr_db,
                                               opts.weak_snr_db);
    reason[l] = r;
    ++ledger.by_reason[static_cast<std::size_t>(r)];
    ledger.locations.push_back({l, base.demand_bps[l], base.capacity_bps[l], base.sinr_db[l],
                                base.snr_db[l], r, -1});
  }
  ledger.struggling = current.size();

  bool refarm_done = false;
  for (const StrategySpec& spec : strategies) {
    // A second refarm amount was already reported as a variant.
    if (spec.kind == Strategy::Refarm && refarm_done) continue;
    if (spec.kind == Strategy::Abs && opts.abs_k1_variant) {
      HealingState k1 = hs.with_plan(reuse_one(sc.bs_count()));
      const auto before = k1.capacity().struggling_set();
      k1.apply(spec);
      ledger.variants.push_back(
          stage_result("abs_k1", before, k1.capacity().struggling_set(), reason));
    }
    if (spec.kind == Strategy::Refarm) {
      refarm_done = true;
      for (const StrategySpec& other : strategies) {
        if (other.kind != Strategy::Refarm || other.refarm_mhz == spec.refarm_mhz) continue;
        HealingState alt = hs;
        alt.apply(other);
        ledger.variants.push_back(stage_result(stage_name(other), current,
                                               alt.capacity().struggling_set(), reason));
      }
    }
    hs.apply(spec);
    const auto after = hs.capacity().struggling_set();
    StageResult r = stage_result(stage_name(spec), current, after, reason);
    const int stage = static_cast<int>(ledger.stages.size());
    for (LocationOutcome& o : ledger.locations)
      if (o.healed_stage < 0 && std::binary_search(current.begin(), current.end(), o.location) &&
          !std::binary_search(after.begin(), after.end(), o.location))
        o.healed_stage = stage;
    ledger.stages.push_back(std::move(r));
    ledger.struggling_after.push_back(after.size());
    current = after;
  }
  ledger.residual = current;
  ledger.muted = hs.muted();
  ledger.comp_links = hs.comp_links();
  return ledger;
}

}  // namespace celltrace
