#include <doctest.h>

#include <sstream>

#include "celltrace/core/error.hpp"
#include "celltrace/core/random.hpp"
#include "celltrace/demand/demand_matrix.hpp"
#include "celltrace/demand/markov.hpp"
#include "fixture.hpp"
#include "oracles.hpp"

using namespace celltrace;

namespace {

DemandMatrix sequence_matrix(const std::vector<int>& deltas) {
  DemandMatrix m({"b0"}, static_cast<std::int64_t>(deltas.size()), DemandKind::Normalized);
  for (std::size_t k = 0; k < deltas.size(); ++k) m.at(0, static_cast<std::int64_t>(k)) = deltas[k];
  return m;
}

ParsedTrace fixture_trace() {
  const auto fx = fixture::make_fixture();
  std::istringstream in(fx.trace_csv);
  return parse_trace(in, fixture::fixture_grid(), -8);
}

}  // namespace

TEST_CASE("normalization matches exact integer floor division") {
  Rng rng(4);
  DemandMatrix raw({"a", "b", "c", "z"}, 50, DemandKind::Raw);
  for (std::size_t b = 0; b < 3; ++b)
    for (std::int64_t k = 0; k < 50; ++k)
      raw.at(b, k) = static_cast<double>(rng.below(b == 2 ? 4000000000000000ULL : 1000));
  const DemandMatrix d = normalize_demand(raw);
  CHECK(d.kind() == DemandKind::Normalized);
  for (std::size_t b = 0; b < 3; ++b) {
    std::int64_t peak = 0;
    for (std::int64_t k = 0; k < 50; ++k) peak = std::max(peak, static_cast<std::int64_t>(raw.at(b, k)));
    bool has_hundred = false;
    for (std::int64_t k = 0; k < 50; ++k) {
      REQUIRE(d.at(b, k) == oracle::normalized_delta(static_cast<std::int64_t>(raw.at(b, k)), peak));
      has_hundred = has_hundred || d.at(b, k) == 100;
    }
    CHECK(has_hundred);
    CHECK_FALSE(d.zero_rows()[b]);
  }
  CHECK(d.zero_rows()[3]);
  for (std::int64_t k = 0; k < 50; ++k) CHECK(d.at(3, k) == 0);
}

TEST_CASE("raw demand equals a direct scan of the records") {
  const auto p = fixture_trace();
  std::vector<CellKey> keys;
  for (const auto& [k, _] : p.table.by_cell()) keys.push_back(k);
  const DemandMatrix m = raw_demand(p.table, keys);
  for (std::size_t b = 0; b < keys.size(); ++b)
    for (std::int64_t k = 0; k < m.slot_count(); k += 7) {
      double sum = 0;
      for (const auto& r : p.table.records())
        if (r.op == keys[b].op && r.cell_id == keys[b].cell_id && r.slot == k && r.tech == Tech::LTE)
          sum += static_cast<double>(r.bytes_down);
      REQUIRE(m.at(b, k) == sum);
    }
}

TEST_CASE("level mapping") {
  TransitionModel full;
  CHECK(full.level_of(37) == 37);
  CHECK(full.delta_of(37) == 37);
  TransitionModel three({TimeKeying::None, 3});
  CHECK(three.level_of(0) == 0);
  CHECK(three.level_of(49) == 0);
  CHECK(three.level_of(50) == 1);
  CHECK(three.level_of(100) == 2);
  CHECK(three.delta_of(1) == 50);
  CHECK(period_count(TimeKeying::DowHour) == 168);
  CHECK(period_count(TimeKeying::Hour) == 24);
  CHECK(period_count(TimeKeying::None) == 1);
}

TEST_CASE("training counts every consecutive pair") {
  Rng rng(12);
  std::vector<int> seq;
  for (int i = 0; i < 500; ++i) seq.push_back(static_cast<int>(rng.below(5)) * 25);
  const DemandMatrix m = sequence_matrix(seq);
  const std::vector<AreaType> areas{AreaType::Suburban};
  const MarkovOptions opts{TimeKeying::None, 5};
  const TransitionModel model = train_demand(m, areas, SlotCalendar(), opts);
  std::vector<int> levels;
  for (int d : seq) levels.push_back(d / 25);
  const auto expected = oracle::count_pairs(levels);
  std::uint64_t total = 0;
  for (const auto& [from, row] : model.transitions())
    for (const auto& [to, n] : row) {
      CHECK(from.area == AreaType::Suburban);
      REQUIRE(expected.at({from.level, to}) == n);
      total += n;
    }
  CHECK(total == seq.size() - 1);
  for (const auto& [from, row] : model.transitions()) {
    double sum = 0;
    for (const auto& [lvl, p] : model.distribution(from)) sum += p;
    CHECK(sum == doctest::Approx(1.0));
  }
  CHECK(model.has_area(AreaType::Suburban));
  CHECK_FALSE(model.has_area(AreaType::Urban));
}

TEST_CASE("calendar keying advances with the slots") {
  const SlotCalendar cal(DayOfWeek::Sun, 22);
  const DemandMatrix m = sequence_matrix({0, 10, 20, 30});
  const std::vector<AreaType> areas{AreaType::Urban};
  const auto model = train_demand(m, areas, cal, {TimeKeying::DowHour, 101});
  CHECK(model.count({AreaType::Urban, 6 * 24 + 22, 0}, 10) == 1);
  CHECK(model.count({AreaType::Urban, 6 * 24 + 23, 10}, 20) == 1);
  CHECK(model.count({AreaType::Urban, 0, 20}, 30) == 1);
  CHECK(model.next_time(167) == 0);
  const auto hourly = train_demand(m, areas, cal, {TimeKeying::Hour, 101});
  CHECK(hourly.count({AreaType::Urban, 23, 10}, 20) == 1);
}

TEST_CASE("training rejects unusable input") {
  const std::vector<AreaType> one{AreaType::Urban};
  CHECK_THROWS_AS(train_demand(sequence_matrix({5}), one, SlotCalendar()), Error);
  DemandMatrix z({"z"}, 4, DemandKind::Normalized);
  z.zero_rows()[0] = true;
  try {
    train_demand(z, one, SlotCalendar());
    FAIL("expected EmptyTrace");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyTrace);
  }
  const std::vector<AreaType> two{AreaType::Urban, AreaType::Rural};
  CHECK_THROWS_AS(train_demand(sequence_matrix({1, 2}), two, SlotCalendar()), Error);
}

TEST_CASE("sampling follows the counts") {
  const TransitionModel::Row row{{3, 7}, {8, 3}};
  Rng rng(99);
  int hits = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) hits += sample_row(row, rng) == 3;
  const auto [lo, hi] = oracle::three_sigma(n, 0.7);
  CHECK(hits >= lo);
  CHECK(hits <= hi);
}

TEST_CASE("generation is seeded and stays on trained levels") {
  Rng rng(2);
  std::vector<int> seq;
  for (int i = 0; i < 400; ++i) seq.push_back(static_cast<int>(rng.below(3)) * 50);
  const std::vector<AreaType> areas{AreaType::Urban};
  const MarkovOptions opts{TimeKeying::Hour, 3};
  const SlotCalendar cal(DayOfWeek::Mon, 0);
  const auto model = train_demand(sequence_matrix(seq), areas, cal, opts);
  const std::vector<std::string> ids{"x", "y"};
  const std::vector<AreaType> gen_areas{AreaType::Urban, AreaType::Urban};
  const auto a = generate_demand(model, ids, gen_areas, 300, cal, 5);
  const auto b = generate_demand(model, ids, gen_areas, 300, cal, 5);
  const auto c = generate_demand(model, ids, gen_areas, 300, cal, 6);
  CHECK(a.values() == b.values());
  CHECK(a.values() != c.values());
  CHECK(a.kind() == DemandKind::Synthetic);
  for (double v : a.values()) CHECK((v == 0 || v == 50 || v == 100));
  const std::vector<AreaType> rural{AreaType::Rural, AreaType::Urban};
  try {
    generate_demand(model, ids, rural, 10, cal, 5);
    FAIL("expected ModelAreaMissing");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ModelAreaMissing);
  }
}

TEST_CASE("unseen states fall back to the marginal") {
  // Level 100 only occurs in the last slot, so it has no successor row.
  const std::vector<AreaType> areas{AreaType::Urban};
  const auto model = train_demand(sequence_matrix({0, 0, 0, 0, 100}), areas, SlotCalendar(),
                                  {TimeKeying::None, 101});
  GenerationStats st;
  const std::vector<std::string> ids{"x"};
  const auto out = generate_demand(model, ids, areas, 2000, SlotCalendar(), 1, &st);
  bool saw_hundred = false;
  for (double v : out.values()) saw_hundred = saw_hundred || v == 100;
  CHECK(saw_hundred);
  CHECK(st.unseen_states > 0);
}

TEST_CASE("model and matrix serialization round-trip") {
  const std::vector<AreaType> areas{AreaType::Rural};
  auto model = train_demand(sequence_matrix({0, 40, 80, 40, 0, 100}), areas, SlotCalendar(),
                            {TimeKeying::DowHour, 101});
  model.metadata().trace_id = "t";
  model.metadata().seed = 3;
  std::stringstream js;
  model.to_json(js);
  const auto back = TransitionModel::from_json(js);
  CHECK(back.transitions() == model.transitions());
  CHECK(back.marginals() == model.marginals());
  CHECK(back.metadata().trace_id == "t");
  CHECK(back.has_area(AreaType::Rural));

  const DemandMatrix m = sequence_matrix({1, 2, 3});
  std::stringstream csv;
  write_demand_csv(csv, m);
  const DemandMatrix r = read_demand_csv(csv, DemandKind::Normalized);
  CHECK(r.bs_ids() == m.bs_ids());
  CHECK(r.values() == m.values());
}
