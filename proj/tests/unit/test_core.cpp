#include <doctest.h>

#include <cmath>
#include <sstream>

#include "celltrace/core/calendar.hpp"
#include "celltrace/core/config.hpp"
#include "celltrace/core/error.hpp"
#include "celltrace/core/grid.hpp"
#include "celltrace/core/polygon.hpp"
#include "celltrace/core/random.hpp"
#include "oracles.hpp"

using namespace celltrace;

namespace {

Grid grid30() { return Grid({37.70, -122.52}, 30, 30, 50.0, 10.0); }

}  // namespace

TEST_CASE("tile boundaries are half-open except at the outer edge") {
  const Grid g = grid30();
  CHECK(g.to_tile(Point{0, 0}) == TileId{0, 0});
  CHECK(g.to_tile(Point{49.999, 0}) == TileId{0, 0});
  CHECK(g.to_tile(Point{50, 0}) == TileId{0, 1});
  CHECK(g.to_tile(Point{0, 50}) == TileId{1, 0});
  CHECK(g.to_tile(Point{1500, 1500}) == TileId{29, 29});
  CHECK_THROWS_AS(g.to_tile(Point{1500.1, 10}), Error);
  CHECK_THROWS_AS(g.to_tile(Point{-1, 10}), Error);
  try {
    g.to_tile(Point{10, 2000});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfExtent);
  }
}

TEST_CASE("every tile center maps back to its tile") {
  const Grid g = grid30();
  for (std::size_t i = 0; i < g.tile_count(); ++i) {
    const TileId t = g.tile_at(i);
    REQUIRE(g.to_tile(g.tile_center(t)) == t);
    REQUIRE(g.index(t) == i);
  }
  CHECK(g.analysis_rows() == 150);
  CHECK(g.analysis_count() == 22500u);
}

TEST_CASE("projection round-trips at city scale") {
  const Grid g = grid30();
  const LatLon p{37.7071, -122.5043};
  const LatLon back = g.unproject(g.project(p));
  CHECK(back.lat == doctest::Approx(p.lat).epsilon(1e-12));
  CHECK(back.lon == doctest::Approx(p.lon).epsilon(1e-12));
  // One degree of latitude is about 111.2 km.
  CHECK(g.project(LatLon{38.70, -122.52}).y == doctest::Approx(111195).epsilon(1e-3));
}

TEST_CASE("neighbors are clipped at the extent") {
  const Grid g = grid30();
  CHECK(g.neighbors({0, 0}).size() == 3);
  CHECK(g.neighbors({0, 5}).size() == 5);
  CHECK(g.neighbors({10, 10}).size() == 8);
}

TEST_CASE("calendar anchors on the local weekday") {
  // 2024-01-01T00:00Z was a Monday.
  const std::int64_t h = 473352;
  auto c = SlotCalendar::from_unix_hour(h, 0);
  CHECK(c.anchor_dow() == DayOfWeek::Mon);
  CHECK(c.anchor_hour() == 0);
  c = SlotCalendar::from_unix_hour(h, -8);
  CHECK(c.anchor_dow() == DayOfWeek::Sun);
  CHECK(c.anchor_hour() == 16);
  CHECK(c.at(8) == SlotTime{DayOfWeek::Mon, 0});
  CHECK(c.hour_of_week(168) == c.hour_of_week(0));
  CHECK_THROWS_AS(SlotCalendar(DayOfWeek::Mon, 24), Error);
}

TEST_CASE("convex hull matches brute force on random clouds") {
  Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    std::vector<Point> pts;
    for (int i = 0; i < 60; ++i) pts.push_back({rng.uniform() * 100, rng.uniform() * 100});
    auto hull = convex_hull(pts);
    auto sorted = hull;
    std::sort(sorted.begin(), sorted.end(),
              [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    REQUIRE(sorted == oracle::brute_force_hull(pts));
    for (std::size_t i = 0; i < hull.size(); ++i)
      REQUIRE(orient(hull[i], hull[(i + 1) % hull.size()], hull[(i + 2) % hull.size()]) > 0);
  }
}

TEST_CASE("hull drops collinear points on integer lattices") {
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    std::vector<Point> pts;
    for (int i = 0; i < 40; ++i)
      pts.push_back({static_cast<double>(rng.below(6)), static_cast<double>(rng.below(6))});
    auto hull = convex_hull(pts);
    std::sort(hull.begin(), hull.end(),
              [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    REQUIRE(hull == oracle::brute_force_hull(pts));
  }
}

TEST_CASE("degenerate hulls") {
  CHECK(convex_hull(std::vector<Point>{}).empty());
  CHECK(convex_hull(std::vector<Point>{{1, 1}, {1, 1}}).size() == 1);
  CHECK(convex_hull(std::vector<Point>{{0, 0}, {1, 1}, {2, 2}, {3, 3}}).size() == 2);
}

TEST_CASE("polygon measures") {
  const std::vector<Point> sq{{0, 0}, {2, 0}, {2, 2}, {0, 2}};
  CHECK(polygon_area(sq) == 4.0);
  CHECK(polygon_perimeter(sq) == 8.0);
  CHECK(polygon_centroid(sq) == Point{1, 1});
  CHECK(convex_contains(sq, {2, 1}));
  CHECK_FALSE(convex_contains(sq, {2.0001, 1}));
  CHECK(polygon_contains(sq, {1, 1}));
  CHECK(diameter(sq) == doctest::Approx(std::sqrt(8.0)));
  const std::vector<Point> seg{{0, 0}, {3, 4}};
  CHECK(polygon_perimeter(seg) == 10.0);
}

TEST_CASE("seeded streams are reproducible and independent") {
  Rng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    REQUIRE(x == b.next());
    differs = differs || x != c.next();
  }
  CHECK(differs);
  CHECK(derive_seed(1, "gen-demand") != derive_seed(1, "gen-deploy"));
  CHECK(derive_seed(1, 7) == derive_seed(1, 7));
  // mt19937_64 is fully specified: the 10000th output of the default seed.
  std::mt19937_64 ref;
  ref.discard(9999);
  CHECK(ref() == 9981545732273789042ULL);
  Rng r(3);
  for (int i = 0; i < 1000; ++i) {
    const double u = r.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    REQUIRE(r.below(7) < 7u);
  }
}

TEST_CASE("core config parsing rejects bad grids") {
  auto doc = nlohmann::json::parse(R"({"grid": {"origin_lat": 37.7, "origin_lon": -122.5,
      "rows": 30, "cols": 30, "tile_size_m": 50, "analysis_cell_m": 10},
      "calendar": {"utc_offset_hours": -8}})");
  const CoreConfig cfg = core_config_from_json(doc);
  CHECK(cfg.grid.rows() == 30);
  CHECK(cfg.utc_offset_hours == -8);
  doc["grid"]["rows"] = 0;
  CHECK_THROWS_AS(core_config_from_json(doc), Error);
  doc["grid"]["rows"] = 30;
  doc["grid"]["analysis_cell_m"] = 80;
  CHECK_THROWS_AS(core_config_from_json(doc), Error);
}
