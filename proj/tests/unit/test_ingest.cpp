#include <doctest.h>

#include <sstream>

#include "celltrace/core/error.hpp"
#include "celltrace/ingest/area_map.hpp"
#include "celltrace/ingest/csv.hpp"
#include "celltrace/ingest/mobility.hpp"
#include "celltrace/ingest/spectrum.hpp"
#include "celltrace/ingest/trace.hpp"
#include "fixture.hpp"

using namespace celltrace;

namespace {

ParsedTrace parse(const std::string& body, const Grid& g, int utc = 0) {
  std::istringstream in(std::string(kTraceHeader) + "\n" + body);
  return parse_trace(in, g, utc);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("csv splitting handles quotes") {
  const auto f = csv::split_line(R"(a,"b,c","d ""e""",,x)" "\r");
  REQUIRE(f.size() == 5);
  CHECK(f[1] == "b,c");
  CHECK(f[2] == "d \"e\"");
  CHECK(f[3].empty());
  CHECK(f[4] == "x");
  CHECK(csv::escape("a,b") == "\"a,b\"");
  CHECK(csv::escape("plain") == "plain");
  CHECK(csv::parse_number<int>(" 42 ") == 42);
  CHECK_FALSE(csv::parse_number<int>("4x").has_value());
}

TEST_CASE("fixture trace rejects exactly the broken rows") {
  const auto fx = fixture::make_fixture();
  std::istringstream in(fx.trace_csv);
  const ParsedTrace p = parse_trace(in, fixture::fixture_grid(), -8);
  CHECK(p.table.size() == 2000);
  CHECK(p.report.input_rows == 2005);
  CHECK(p.report.count(RejectReason::OutOfExtent) == 2);
  CHECK(p.report.count(RejectReason::NegativeBytes) == 1);
  CHECK(p.report.count(RejectReason::UnknownTech) == 1);
  CHECK(p.report.count(RejectReason::MalformedRow) == 1);
  CHECK(p.report.rejected() + p.table.size() == p.report.input_rows);
  CHECK(p.table.slot_count() == 168);
  CHECK(p.table.has_users());
  CHECK(p.table.by_cell().size() == 30);
}

TEST_CASE("slots count hours from the first record") {
  const Grid g = fixture::fixture_grid();
  const LatLon c = g.unproject({700, 700});
  std::ostringstream body;
  body << "473355,u1," << c.lat << "," << c.lon << ",A,1,LTE,10,1,web\n";
  body << "473352,u2," << c.lat << "," << c.lon << ",A,1,3G,20,1,web\n";
  const auto p = parse(body.str(), g);
  REQUIRE(p.table.size() == 2);
  CHECK(p.table.first_ts_hour() == 473352);
  CHECK(p.table.slot_count() == 4);
  CHECK(p.table.records()[0].slot == 3);
  CHECK(p.table.records()[1].tech == Tech::G3);
  CHECK(p.table.by_slot()[3].size() == 1);
}

TEST_CASE("header and file errors") {
  const Grid g = fixture::fixture_grid();
  std::istringstream bad("ts,user\n1,2\n");
  CHECK(code_of([&] { parse_trace(bad, g); }) == ErrorCode::SchemaError);
  CHECK(code_of([&] { parse_trace(std::filesystem::path("/nonexistent/trace.csv"), g); }) ==
        ErrorCode::FileError);
}

TEST_CASE("records without users still parse, mobility then refuses") {
  const Grid g = fixture::fixture_grid();
  const LatLon c = g.unproject({100, 100});
  std::ostringstream body;
  body << "473352,," << c.lat << "," << c.lon << ",A,1,LTE,10,1,web\n";
  const auto p = parse(body.str(), g);
  CHECK_FALSE(p.table.has_users());
  CHECK(code_of([&] { classify_mobility(p.table); }) == ErrorCode::UsersAbsent);
}

TEST_CASE("mobility uses the largest displacement within a slot") {
  const Grid g = fixture::fixture_grid();
  auto ll = [&](double x, double y) { return g.unproject({x, y}); };
  std::ostringstream body;
  auto add = [&](int ts, const char* u, LatLon p) {
    body.precision(12);
    body << ts << "," << u << "," << p.lat << "," << p.lon << ",A,1,LTE,1,1,web\n";
  };
  add(473352, "walker", ll(100, 100));
  add(473352, "walker", ll(500, 100));
  add(473352, "driver", ll(100, 100));
  add(473352, "driver", ll(100, 1200));
  add(473353, "driver", ll(100, 1200));
  const auto p = parse(body.str(), g);
  const auto flags = classify_mobility(p.table);
  CHECK(flags.at({"walker", 0}) == Mobility::Static);
  CHECK(flags.at({"driver", 0}) == Mobility::Mobile);
  CHECK(flags.at({"driver", 1}) == Mobility::Static);
}

TEST_CASE("area map csv must cover every tile") {
  const Grid g(LatLon{37.7, -122.5}, 2, 2);
  std::istringstream ok("row,col,area_type\n0,0,urban\n0,1,Suburban\n1,0,rural\n1,1,urban\n");
  const AreaMap m = load_area_map_csv(ok, g);
  CHECK(m.at({0, 1}) == AreaType::Suburban);
  CHECK(m.at({1, 0}) == AreaType::Rural);
  std::istringstream missing("row,col,area_type\n0,0,urban\n");
  CHECK(code_of([&] { load_area_map_csv(missing, g); }) == ErrorCode::SchemaError);
  std::istringstream unknown("row,col,area_type\n0,0,forest\n0,1,urban\n1,0,urban\n1,1,urban\n");
  CHECK(code_of([&] { load_area_map_csv(unknown, g); }) == ErrorCode::SchemaError);
}

TEST_CASE("area map geojson is rasterized by majority") {
  const Grid g(LatLon{37.7, -122.5}, 1, 2);
  auto ring = [&](double x0, double x1) {
    nlohmann::json r = nlohmann::json::array();
    for (Point p : {Point{x0, -1}, Point{x1, -1}, Point{x1, 51}, Point{x0, 51}, Point{x0, -1}}) {
      const LatLon ll = g.unproject(p);
      r.push_back({ll.lon, ll.lat});
    }
    return r;
  };
  nlohmann::json doc = {{"type", "FeatureCollection"}, {"features", nlohmann::json::array()}};
  doc["features"].push_back({{"type", "Feature"},
                             {"properties", {{"area_type", "urban"}}},
                             {"geometry", {{"type", "Polygon"}, {"coordinates", {ring(-1, 70)}}}}});
  doc["features"].push_back({{"type", "Feature"},
                             {"properties", {{"area_type", "rural"}}},
                             {"geometry", {{"type", "Polygon"}, {"coordinates", {ring(70, 101)}}}}});
  std::istringstream in(doc.dump());
  const AreaMap m = load_area_map_geojson(in, g);
  CHECK(m.at({0, 0}) == AreaType::Urban);
  // Columns 50..70 urban (2 centers), 70..100 rural (3 centers).
  CHECK(m.at({0, 1}) == AreaType::Rural);
}

TEST_CASE("spectrum plans need both tiers") {
  std::istringstream ok(R"({"operators": {"A": [
      {"band": "17", "center_ghz": 0.7, "bandwidth_mhz": 10, "tier": "macro"},
      {"band": "4", "center_ghz": 1.7, "bandwidth_mhz": 20, "tier": "micro", "guard_rbs": 10}]}})");
  const SpectrumPlan s = load_spectrum(ok);
  CHECK(s.band_for("A", Tier::Macro).rbs() == 55);
  CHECK(s.band_for("A", Tier::Micro).rbs() == 101);
  CHECK(code_of([&] { s.band_for("B", Tier::Macro); }) == ErrorCode::MissingTier);
  std::istringstream macro_only(R"({"operators": {"A": [
      {"band": "17", "center_ghz": 0.7, "bandwidth_mhz": 10, "tier": "macro"}]}})");
  CHECK(code_of([&] { load_spectrum(macro_only); }) == ErrorCode::MissingTier);
  CHECK(resource_blocks(5.0) == 27);
  CHECK(resource_blocks(12.0) == 66);
  CHECK(resource_blocks(1.4, 2) == 5);
}
