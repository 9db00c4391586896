#include "fixture.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "celltrace/core/random.hpp"
#include "celltrace/io/format.hpp"

namespace celltrace::fixture {

namespace {

struct CellSpec {
  std::string op;
  std::string id;
  Point center;
  double radius_m;
  double weight;
};

// 2023-03-06 00:00 at UTC-8, a Monday.
constexpr std::int64_t kFirstHour = 19422 * 24 + 8;

std::vector<CellSpec> cells() {
  std::vector<CellSpec> out;
  const std::array<Point, 4> macro{{{300, 300}, {1200, 300}, {300, 1200}, {1200, 1200}}};
  for (int m = 0; m < 4; ++m) {
    out.push_back({"MNO1", "M1-" + std::to_string(m), macro[m], 650.0, 3.0});
    out.push_back({"MNO2", "M2-" + std::to_string(m),
                   {macro[m].x + 120.0, macro[m].y - 90.0}, 600.0, 2.5});
  }
  // Small cells cluster in the urban core.
  const std::array<Point, 11> micro{{{700, 700}, {820, 760}, {640, 860}, {900, 900},
                                     {560, 600}, {760, 980}, {1000, 620}, {450, 950},
                                     {1050, 1050}, {250, 700}, {1250, 800}}};
  for (int m = 0; m < 11; ++m) {
    const double r = 110.0 + 14.0 * m;
    out.push_back({"MNO1", "m1-" + std::to_string(m), micro[m], r, 1.5});
    out.push_back({"MNO2", "m2-" + std::to_string(m),
                   {micro[m].x + 35.0, micro[m].y + 55.0}, r * 0.9, 1.2});
  }
  return out;
}

double diurnal(int hour) {
  return 0.35 + 0.65 * std::pow(std::sin(std::numbers::pi * (hour - 4) / 24.0), 2.0);
}

}  // namespace

Grid fixture_grid() { return Grid(LatLon{37.70, -122.52}, 30, 30, 50.0, 10.0); }

Fixture make_fixture(const Options& opts) {
  const Grid grid = fixture_grid();
  Rng rng(opts.seed);
  const auto specs = cells();

  Fixture fx;
  std::ostringstream areas;
  areas << "row,col,area_type\n";
  for (int r = 0; r < grid.rows(); ++r)
    for (int c = 0; c < grid.cols(); ++c) {
      const int ring = std::max(std::abs(2 * r - 29), std::abs(2 * c - 29));
      areas << r << ',' << c << ',' << (ring < 12 ? "urban" : ring < 22 ? "suburban" : "rural")
            << '\n';
    }
  fx.areas_csv = areas.str();

  // Three home users per cell.
  std::vector<std::vector<std::string>> users(specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i)
    for (int u = 0; u < 3; ++u) users[i].push_back("u" + std::to_string(i * 3 + u));

  auto sample_in = [&](const CellSpec& s) {
    for (;;) {
      const double r = s.radius_m * std::sqrt(rng.uniform());
      const double a = 2.0 * std::numbers::pi * rng.uniform();
      const Point p{s.center.x + r * std::cos(a), s.center.y + r * std::sin(a)};
      if (p.x > 1.0 && p.y > 1.0 && p.x < grid.width_m() - 1.0 && p.y < grid.height_m() - 1.0)
        return p;
    }
  };

  std::ostringstream t;
  t << "ts_hour,user_id,lat,lon,operator,cell_id,tech,bytes_down,bytes_up,app\n";
  auto row = [&](std::int64_t slot, const std::string& user, LatLon ll, const CellSpec& s,
                 const char* tech, std::int64_t down, std::int64_t up, const char* app) {
    t << kFirstHour + slot << ',' << user << ',' << fmt(ll.lat) << ',' << fmt(ll.lon) << ','
      << s.op << ',' << s.id << ',' << tech << ',' << down << ',' << up << ',' << app << '\n';
  };
  static const char* kApps[] = {"video", "web", "social", "maps"};

  double total_w = 0.0;
  for (const auto& s : specs) total_w += s.weight;
  std::vector<double> slot_w(static_cast<std::size_t>(opts.slots));
  double slot_total = 0.0;
  for (int k = 0; k < opts.slots; ++k) slot_total += slot_w[static_cast<std::size_t>(k)] = diurnal(k % 24);

  const std::size_t mobile_events = 12;
  const std::size_t regular = opts.records - 2 * mobile_events;
  for (std::size_t n = 0; n < regular; ++n) {
    // Every cell gets a guaranteed share so each hull is well defined.
    std::size_t ci = n < specs.size() * 20 ? n % specs.size() : 0;
    if (n >= specs.size() * 20) {
      double x = rng.uniform() * total_w;
      while (ci + 1 < specs.size() && x >= specs[ci].weight) x -= specs[ci++].weight;
    }
    double y = rng.uniform() * slot_total;
    std::int64_t slot = 0;
    while (slot + 1 < opts.slots && y >= slot_w[static_cast<std::size_t>(slot)])
      y -= slot_w[static_cast<std::size_t>(slot++)];
    const CellSpec& s = specs[ci];
    const auto& pool = users[ci];
    const std::string& user = pool[rng.below(pool.size())];
    const double scale = diurnal(static_cast<int>(slot % 24));
    const auto down = static_cast<std::int64_t>(-std::log(1.0 - rng.uniform()) * 1.5e8 * scale);
    const auto up = down / 8;
    row(slot, user, grid.unproject(sample_in(s)), s, rng.bernoulli(0.1) ? "3G" : "LTE", down, up,
        kApps[rng.below(4)]);
  }

  // Users seen at two far-apart wide-area cells within one slot are mobile.
  for (std::size_t e = 0; e < mobile_events; ++e) {
    const std::int64_t slot = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(opts.slots)));
    const std::size_t from = 2 * (e % 4);
    const std::size_t to = 2 * (3 - e % 4);
    const std::string& user = users[from][e % 3];
    const auto down = static_cast<std::int64_t>(2.0e8 + rng.uniform() * 6.0e8);
    row(slot, user, grid.unproject(specs[from].center), specs[from], "LTE", down, down / 10, "maps");
    row(slot, user, grid.unproject(specs[to].center), specs[to], "LTE", down, down / 10, "maps");
  }

  // Broken rows: outside the extent, negative bytes, unknown technology and
  // a truncated line.
  const LatLon far = grid.unproject({-800.0, 400.0});
  row(3, "u0", far, specs[0], "LTE", 1000, 100, "web");
  row(4, "u1", grid.unproject({2500.0, 2500.0}), specs[1], "LTE", 1000, 100, "web");
  row(5, "u2", grid.unproject({700.0, 700.0}), specs[2], "LTE", -5, 100, "web");
  row(6, "u3", grid.unproject({700.0, 700.0}), specs[3], "5G", 1000, 100, "web");
  t << kFirstHour + 7 << ",u4,37.70\n";
  fx.trace_csv = t.str();

  nlohmann::ordered_json cfg;
  cfg["grid"] = {{"origin_lat", 37.70}, {"origin_lon", -122.52}, {"rows", 30},
                 {"cols", 30},          {"tile_size_m", 50},     {"analysis_cell_m", 10}};
  cfg["calendar"] = {{"utc_offset_hours", -8}};
  cfg["inputs"] = {{"trace", "trace.csv"},
                   {"area_map", "areas.csv"},
                   {"spectrum", "../spectrum_sf.json"},
                   {"throughput", "../throughput_2x2.json"}};
  cfg["output_dir"] = "out";
  cfg["seed"] = 7;
  cfg["reconstruct"] = {{"macro_watershed_m", 450}};
  cfg["demand"] = {{"keying", "dow_hour"}, {"levels", 101}};
  cfg["deploy"] = {{"passes", 2}, {"placement", "uniform"}};
  cfg["validate"] = {{"k", 5}, {"deployment", true}};
  cfg["radio"] = {{"reuse", "flex"}, {"area_block_m", 500}, {"min_sinr_db", -10}};
  cfg["projection"] = {{"horizon_years", 4}, {"include_3g", true}, {"use_mobility", true}};
  cfg["healing"] = {{"strategies", "mimo,refarm5,refarm10,comp,abs"}, {"mimo_factor", 3.48}};
  fx.config = cfg;
  return fx;
}

}  // namespace celltrace::fixture
