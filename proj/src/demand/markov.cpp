#include "celltrace/demand/markov.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>

#include "celltrace/core/error.hpp"

namespace celltrace {

int period_count(TimeKeying k) noexcept {
  switch (k) {
    case TimeKeying::DowHour: return 168;
    case TimeKeying::Hour: return 24;
    case TimeKeying::None: return 1;
  }
  return 1;
}

std::string_view to_string(TimeKeying k) noexcept {
  switch (k) {
    case TimeKeying::DowHour: return "dow_hour";
    case TimeKeying::Hour: return "hour";
    case TimeKeying::None: return "none";
  }
  return "?";
}

namespace {

TimeKeying parse_keying(const std::string& s) {
  if (s == "dow_hour") return TimeKeying::DowHour;
  if (s == "hour") return TimeKeying::Hour;
  if (s == "none") return TimeKeying::None;
  throw Error(ErrorCode::SchemaError, "unknown time keying '" + s + "'");
}

std::uint64_t row_total(const TransitionModel::Row& row) noexcept {
  std::uint64_t t = 0;
  for (const auto& [lvl, n] : row) t += n;
  return t;
}

}  // namespace

TransitionModel::TransitionModel(MarkovOptions opts) : opts_(opts) {
  if (opts_.levels < 2 || opts_.levels > 101)
    throw Error(ErrorCode::InvalidArgument, "demand levels must lie in [2, 101]");
}

int TransitionModel::level_of(double delta) const noexcept {
  const double scaled = delta * (opts_.levels - 1) / 100.0;
  return std::clamp(static_cast<int>(std::floor(scaled + 1e-9)), 0, opts_.levels - 1);
}

double TransitionModel::delta_of(int level) const noexcept {
  return std::round(level * 100.0 / (opts_.levels - 1));
}

int TransitionModel::time_of(const SlotCalendar& cal, std::int64_t slot) const noexcept {
  switch (opts_.keying) {
    case TimeKeying::DowHour: return cal.hour_of_week(slot);
    case TimeKeying::Hour: return cal.at(slot).hour;
    case TimeKeying::None: return 0;
  }
  return 0;
}

void TransitionModel::add_transition(const MarkovState& from, int to_level, std::uint64_t n) {
  ctr_[from][to_level] += n;
}

void TransitionModel::add_observation(const MarkovState& s, std::uint64_t n) {
  marginal_[{s.area, s.time, 0}][s.level] += n;
}

std::uint64_t TransitionModel::count(const MarkovState& from, int to_level) const noexcept {
  const auto it = ctr_.find(from);
  if (it == ctr_.end()) return 0;
  const auto jt = it->second.find(to_level);
  return jt == it->second.end() ? 0 : jt->second;
}

double TransitionModel::probability(const MarkovState& from, int to_level) const noexcept {
  const auto it = ctr_.find(from);
  if (it == ctr_.end()) return 0.0;
  const auto jt = it->second.find(to_level);
  if (jt == it->second.end()) return 0.0;
  return static_cast<double>(jt->second) / static_cast<double>(row_total(it->second));
}

std::vector<std::pair<int, double>> TransitionModel::distribution(const MarkovState& from) const {
  std::vector<std::pair<int, double>> out;
  const auto it = ctr_.find(from);
  if (it == ctr_.end()) return out;
  const double total = static_cast<double>(row_total(it->second));
  for (const auto& [lvl, n] : it->second) out.emplace_back(lvl, static_cast<double>(n) / total);
  return out;
}

void TransitionModel::to_json(std::ostream& out) const {
  using nlohmann::ordered_json;
  ordered_json j;
  j["format"] = "celltrace.transition_model";
  j["version"] = 1;
  j["levels"] = opts_.levels;
  j["time_keying"] = std::string(to_string(opts_.keying));
  j["metadata"] = {{"trace_id", meta_.trace_id}, {"seed", meta_.seed}};
  ordered_json areas = ordered_json::array();
  for (int a = 0; a < kAreaTypeCount; ++a)
    if (areas_[a]) areas.push_back(std::string(to_string(static_cast<AreaType>(a))));
  j["areas"] = areas;
  auto dump_rows = [](const std::map<MarkovState, Row>& rows, bool with_level) {
    ordered_json arr = ordered_json::array();
    for (const auto& [s, row] : rows) {
      ordered_json e;
      e["area"] = std::string(to_string(s.area));
      e["time"] = s.time;
      if (with_level) e["level"] = s.level;
      ordered_json counts = ordered_json::array();
      for (const auto& [lvl, n] : row) counts.push_back({lvl, n});
      e["counts"] = counts;
      arr.push_back(std::move(e));
    }
    return arr;
  };
  j["transitions"] = dump_rows(ctr_, true);
  j["marginals"] = dump_rows(marginal_, false);
  out << j.dump(1) << '\n';
}

TransitionModel TransitionModel::from_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SchemaError, std::string("transition model: ") + e.what());
  }
  try {
    if (j.at("format") != "celltrace.transition_model" || j.at("version") != 1)
      throw Error(ErrorCode::SchemaError, "not a version 1 transition model");
    MarkovOptions opts;
    opts.levels = j.at("levels").get<int>();
    opts.keying = parse_keying(j.at("time_keying").get<std::string>());
    TransitionModel m(opts);
    m.meta_.trace_id = j.at("metadata").at("trace_id").get<std::string>();
    m.meta_.seed = j.at("metadata").at("seed").get<std::uint64_t>();
    auto area = [](const nlohmann::json& v) {
      const auto a = parse_area_type(v.get<std::string>());
      if (!a) throw Error(ErrorCode::SchemaError, "unknown area type");
      return *a;
    };
    for (const auto& a : j.at("areas")) m.mark_area(area(a));
    const int periods = period_count(opts.keying);
    auto load_rows = [&](const nlohmann::json& arr, std::map<MarkovState, Row>& rows,
                         bool with_level) {
      for (const auto& e : arr) {
        MarkovState s{area(e.at("area")), e.at("time").get<int>(),
                      with_level ? e.at("level").get<int>() : 0};
        if (s.time < 0 || s.time >= periods || s.level < 0 || s.level >= opts.levels)
          throw Error(ErrorCode::SchemaError, "transition state out of range");
        for (const auto& c : e.at("counts")) {
          const int lvl = c.at(0).get<int>();
          if (lvl < 0 || lvl >= opts.levels)
            throw Error(ErrorCode::SchemaError, "transition level out of range");
          rows[s][lvl] += c.at(1).get<std::uint64_t>();
        }
      }
    };
    load_rows(j.at("transitions"), m.ctr_, true);
    load_rows(j.at("marginals"), m.marginal_, false);
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SchemaError, std::string("transition model: ") + e.what());
  }
}

TransitionModel train_demand(const DemandMatrix& delta, std::span<const AreaType> areas,
                             const SlotCalendar& calendar, const MarkovOptions& opts) {
  if (delta.kind() == DemandKind::Raw)
    throw Error(ErrorCode::InvalidArgument, "train_demand expects normalized demand");
  if (areas.size() != delta.bs_count())
    throw Error(ErrorCode::IndexMismatch, "one area type per BS row is required");
  if (delta.slot_count() < 2)
    throw Error(ErrorCode::EmptyTrace, "need at least two consecutive slots");

  TransitionModel model(opts);
  bool any = false;
  for (std::size_t b = 0; b < delta.bs_count(); ++b) {
    if (delta.zero_rows()[b]) continue;
    any = true;
    const AreaType a = areas[b];
    model.mark_area(a);
    MarkovState prev{a, model.time_of(calendar, 0), model.level_of(delta.at(b, 0))};
    model.add_observation(prev);
    for (std::int64_t k = 1; k < delta.slot_count(); ++k) {
      const MarkovState cur{a, model.time_of(calendar, k), model.level_of(delta.at(b, k))};
      model.add_transition(prev, cur.level);
      model.add_observation(cur);
      prev = cur;
    }
  }
  if (!any) throw Error(ErrorCode::EmptyTrace, "every BS row has zero demand");
  return model;
}

int sample_row(const TransitionModel::Row& row, Rng& rng) {
  std::uint64_t r = rng.below(row_total(row));
  for (const auto& [lvl, n] : row) {
    if (r < n) return lvl;
    r -= n;
  }
  return row.rbegin()->first;
}

DemandMatrix generate_demand(const TransitionModel& model, const std::vector<std::string>& bs_ids,
                             std::span<const AreaType> areas, std::int64_t slots,
                             const SlotCalendar& calendar, std::uint64_t seed,
                             GenerationStats* stats) {
  if (areas.size() != bs_ids.size())
    throw Error(ErrorCode::IndexMismatch, "one area type per BS is required");
  for (AreaType a : areas)
    if (!model.has_area(a))
      throw Error(ErrorCode::ModelAreaMissing,
                  "no demand chain for area type " + std::string(to_string(a)));

  GenerationStats local;
  GenerationStats& st = stats ? *stats : local;
  DemandMatrix out(bs_ids, slots, DemandKind::Synthetic);
  if (slots == 0) return out;

  const auto& marg = model.marginals();
  std::map<AreaType, TransitionModel::Row> area_marginal;
  for (const auto& [s, row] : marg)
    for (const auto& [lvl, n] : row) area_marginal[s.area][lvl] += n;

  for (std::size_t b = 0; b < bs_ids.size(); ++b) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(b)));
    const AreaType a = areas[b];
    int time = model.time_of(calendar, 0);
    int level;
    const auto init = marg.find({a, time, 0});
    if (init != marg.end()) {
      level = sample_row(init->second, rng);
    } else {
      ++st.initial_fallbacks;
      level = sample_row(area_marginal.at(a), rng);
    }
    out.at(b, 0) = model.delta_of(level);
    for (std::int64_t k = 1; k < slots; ++k) {
      const int next = model.time_of(calendar, k);
      const auto it = model.transitions().find({a, time, level});
      if (it != model.transitions().end()) {
        level = sample_row(it->second, rng);
      } else if (const auto mt = marg.find({a, next, 0}); mt != marg.end()) {
        ++st.unseen_states;
        level = sample_row(mt->second, rng);
      } else {
        ++st.held_values;
      }
      time = next;
      out.at(b, k) = model.delta_of(level);
    }
  }
  return out;
}

}  // namespace celltrace
