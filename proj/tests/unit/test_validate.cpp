#include <doctest.h>

#include <cmath>
#include <sstream>

#include "celltrace/core/error.hpp"
#include "celltrace/core/random.hpp"
#include "celltrace/ingest/area_map.hpp"
#include "celltrace/validate/cross_validation.hpp"
#include "celltrace/validate/deploy_stats.hpp"
#include "celltrace/validate/metrics.hpp"
#include "fixture.hpp"
#include "oracles.hpp"

using namespace celltrace;

namespace {

DemandMatrix random_matrix(Rng& rng, std::size_t bs, std::int64_t slots) {
  std::vector<std::string> ids;
  for (std::size_t b = 0; b < bs; ++b) ids.push_back("b" + std::to_string(b));
  DemandMatrix m(ids, slots, DemandKind::Normalized);
  for (std::size_t b = 0; b < bs; ++b)
    for (std::int64_t k = 0; k < slots; ++k) m.at(b, k) = static_cast<double>(rng.below(101));
  return m;
}

oracle::Matrix as_rows(const DemandMatrix& m) {
  oracle::Matrix out(m.bs_count());
  for (std::size_t b = 0; b < m.bs_count(); ++b) out[b].assign(m.row(b).begin(), m.row(b).end());
  return out;
}

}  // namespace

TEST_CASE("rmse at all granularities matches direct summation") {
  Rng rng(77);
  for (int t = 0; t < 20; ++t) {
    const std::size_t bs = 1 + rng.below(12);
    const std::int64_t slots = 24 + static_cast<std::int64_t>(rng.below(300));
    const auto a = random_matrix(rng, bs, slots), b = random_matrix(rng, bs, slots);
    const SlotCalendar cal(static_cast<DayOfWeek>(rng.below(7)), static_cast<int>(rng.below(24)));
    std::vector<int> hours;
    for (std::int64_t k = 0; k < slots; ++k) hours.push_back((cal.anchor_hour() + static_cast<int>(k)) % 24);
    const auto ra = as_rows(a), rb = as_rows(b);
    auto rel = [](double x, double y) { return std::fabs(x - y) / std::max(1.0, std::fabs(y)); };
    REQUIRE(rel(rmse(a, b, Granularity::Hour, cal), oracle::rmse_hour(ra, rb, hours)) <= 1e-12);
    REQUIRE(rel(rmse(a, b, Granularity::PerBS, cal), oracle::rmse_bs(ra, rb)) <= 1e-12);
    REQUIRE(rel(rmse(a, b, Granularity::PerBSSlot, cal), oracle::rmse_bs_slot(ra, rb)) <= 1e-12);
  }
}

TEST_CASE("rmse of identical matrices is zero; shapes must agree") {
  Rng rng(1);
  const auto a = random_matrix(rng, 3, 48);
  const SlotCalendar cal;
  CHECK(rmse(a, a, Granularity::PerBSSlot, cal) == 0.0);
  const auto b = random_matrix(rng, 4, 48);
  CHECK_THROWS_AS(rmse(a, b, Granularity::Hour, cal), Error);
}

TEST_CASE("profile and totals") {
  DemandMatrix m({"a", "b"}, 48, DemandKind::Normalized);
  for (std::int64_t k = 0; k < 48; ++k) {
    m.at(0, k) = 1;
    m.at(1, k) = static_cast<double>(k);
  }
  const auto prof = hourly_profile(m, SlotCalendar(DayOfWeek::Mon, 22));
  // Hour 22 collects slots 0 and 24.
  CHECK(prof[22] == 2 + 0 + 24);
  CHECK(prof[0] == 2 + 2 + 26);
  const auto tot = per_bs_totals(m);
  CHECK(tot[0] == 48);
  CHECK(tot[1] == 47 * 48 / 2);
}

TEST_CASE("empirical cdf and ks distance against counting") {
  Rng rng(6);
  for (int t = 0; t < 20; ++t) {
    std::vector<std::int64_t> a, b;
    for (int i = 0; i < 80; ++i) a.push_back(static_cast<std::int64_t>(rng.below(9)));
    for (int i = 0; i < 50; ++i) b.push_back(static_cast<std::int64_t>(rng.below(12)));
    const auto fa = empirical_cdf(a), fb = empirical_cdf(b);
    for (const auto& [v, p] : fa) REQUIRE(p == doctest::Approx(oracle::cdf_at(a, v)));
    CHECK(fa.back().second == 1.0);
    REQUIRE(ks_distance(fa, fb) == doctest::Approx(oracle::ks(a, b)).epsilon(1e-12));
  }
  const std::vector<std::int64_t> same{1, 2, 2, 5};
  CHECK(ks_distance(empirical_cdf(same), empirical_cdf(same)) == 0.0);
}

TEST_CASE("neighborhood sums exclude the tile itself") {
  Deployment d(3, 3);
  for (std::size_t i = 0; i < 9; ++i) d[i] = static_cast<std::int32_t>(i);
  const auto s = neighborhood_sums(d);
  CHECK(s[4] == 36 - 4);
  CHECK(s[0] == 1 + 3 + 4);
  CHECK(s[8] == 4 + 5 + 7);
  const auto st = deployment_stats(d, d);
  CHECK(st.ks_tile == 0.0);
  CHECK(st.ks_neigh == 0.0);
  CHECK(st.real_tile_mean == 4.0);
  CHECK_THROWS_AS(deployment_stats(d, Deployment(3, 4)), Error);
}

TEST_CASE("fold assignment is uniform and stable") {
  const FoldAssignment f(10, 123);
  std::vector<std::size_t> count(10, 0);
  for (int u = 0; u < 10000; ++u) ++count[static_cast<std::size_t>(f.fold_of("user" + std::to_string(u)))];
  const auto [lo, hi] = oracle::three_sigma(10000, 0.1);
  for (std::size_t c : count) {
    CHECK(c >= lo);
    CHECK(c <= hi);
  }
  CHECK(f.fold_of("alice") == FoldAssignment(10, 123).fold_of("alice"));
  try {
    FoldAssignment bad(1, 0);
    FAIL("expected InvalidK");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidK);
  }
}

TEST_CASE("combining runs takes the rounded mean") {
  DemandMatrix a({"x"}, 3, DemandKind::Synthetic), b = a;
  a.at(0, 0) = 1;
  b.at(0, 0) = 2;
  a.at(0, 1) = 10;
  b.at(0, 1) = 13;
  const std::vector<DemandMatrix> runs{a, b};
  const auto m = combine_mean(runs);
  CHECK(m.at(0, 0) == 2);  // 1.5 rounds away from zero
  CHECK(m.at(0, 1) == 12);
  Deployment p(1, 2), q(1, 2);
  p[0] = 1;
  q[0] = 0;
  p[1] = 3;
  q[1] = 4;
  const std::vector<Deployment> deps{p, q};
  const auto c = combine_mean(deps);
  CHECK(c[0] == 1);
  CHECK(c[1] == 4);
}

TEST_CASE("cross-validation on the fixture") {
  const auto fx = fixture::make_fixture();
  std::istringstream in(fx.trace_csv), areas_in(fx.areas_csv);
  const Grid g = fixture::fixture_grid();
  const auto p = parse_trace(in, g, -8);
  const AreaMap areas = load_area_map_csv(areas_in, g);
  CrossValidationOptions opts;
  opts.k = 5;
  opts.seed = 7;
  opts.cells.macro_watershed_m = 450;
  const auto rep = cross_validate(p.table, g, areas, opts);
  std::size_t users = 0;
  for (std::size_t n : rep.fold_users) users += n;
  CHECK(users == p.table.by_user().size());
  CHECK(rep.bs_ids.size() == 30);
  CHECK(std::isfinite(rep.rmse_hour));
  CHECK(rep.rmse_bk >= 0.0);
  CHECK(rep.deployment.size() == 2);
  const auto again = cross_validate(p.table, g, areas, opts);
  CHECK(again.rmse_bk == rep.rmse_bk);
  CHECK(again.totals_synth == rep.totals_synth);
}
