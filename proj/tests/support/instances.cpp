#include "instances.hpp"

#include <cmath>
#include <string>

#include "celltrace/core/random.hpp"
#include "celltrace/radio/propagation.hpp"
#include "celltrace/radio/throughput.hpp"

namespace celltrace::instances {

namespace {

BaseStation macro(const std::string& id, Point p) {
  return make_base_station(id, "T", BsClass::Macro, p, toy_grid());
}

std::vector<Point> square(Point c, double half) {
  return {{c.x - half, c.y - half}, {c.x + half, c.y - half}, {c.x + half, c.y + half},
          {c.x - half, c.y + half}};
}

std::vector<Location> raster_locations(const Grid& g) {
  std::vector<Location> out;
  for (std::size_t i = 0; i < g.analysis_count(); ++i)
    out.push_back({g.analysis_center(g.analysis_at(i)), i});
  return out;
}

}  // namespace

SpectrumPlan toy_spectrum() {
  return SpectrumPlan({{"T", {Band{"a", 0.7, 12, Tier::Macro, 0}, Band{"b", 1.9, 15, Tier::Micro, 0}}}});
}

Grid toy_grid() { return Grid({37.70, -122.52}, 40, 40, 50.0, 10.0); }

SinrToy sinr_toy() {
  const Grid g = toy_grid();
  const std::vector<Point> at = {{120, 130}, {850, 200}, {480, 520}, {150, 900}, {910, 870}};
  std::vector<BaseStation> st;
  std::vector<oracle::Tx> tx;
  RadioConfig cfg;
  for (std::size_t i = 0; i < at.size(); ++i) {
    st.push_back(macro("m" + std::to_string(i), at[i]));
    tx.push_back({at[i], st.back().tx_power_dbm, 0.7, cfg.macro_radius_m});
  }
  // -174 dBm/Hz over 12 MHz plus a 9 dB noise figure.
  const double noise_mw = std::pow(10.0, (-174.0 + 10.0 * std::log10(12e6) + 9.0) / 10.0);
  auto locs = raster_locations(g);
  std::vector<double> demand(locs.size(), 0.0);
  Instance inst{RadioScenario(std::move(st), toy_spectrum(), std::move(locs), cfg), demand,
                reuse_one(at.size())};
  return {std::move(inst), tx, noise_mw};
}

Instance single_bs() {
  const Grid g = toy_grid();
  auto locs = raster_locations(g);
  std::vector<double> demand(locs.size(), 0.0);
  return {RadioScenario({macro("solo", {480, 520})}, toy_spectrum(), std::move(locs)), demand,
          reuse_one(1)};
}

Instance reuse_toy() {
  std::vector<BaseStation> st;
  for (int i = 0; i < 3; ++i) {
    const double a = 2.0 * kPi * i / 3.0;
    st.push_back(macro("c" + std::to_string(i), {500 + 10 * std::cos(a), 500 + 10 * std::sin(a)}));
  }
  std::vector<Location> locs;
  for (int i = 0; i < 24; ++i) {
    const double a = 2.0 * kPi * i / 24.0;
    locs.push_back({{500 + 100 * std::cos(a), 500 + 100 * std::sin(a)}, static_cast<std::uint64_t>(i)});
  }
  std::vector<double> demand(locs.size(), 1e6);
  return {RadioScenario(std::move(st), toy_spectrum(), std::move(locs)), demand, reuse_one(3)};
}

Instance random_reuse(std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t B = 4 + rng.below(5);
  std::vector<BaseStation> st;
  for (std::size_t b = 0; b < B; ++b)
    st.push_back(macro("r" + std::to_string(b), {rng.uniform() * 1000, rng.uniform() * 1000}));
  std::vector<Location> locs;
  std::vector<double> demand;
  for (std::uint64_t l = 0; l < 60; ++l) {
    locs.push_back({{rng.uniform() * 1000, rng.uniform() * 1000}, l});
    demand.push_back(rng.uniform() < 0.2 ? 0.0 : rng.uniform() * 5e6);
  }
  RadioConfig cfg;
  cfg.macro_radius_m = 400;
  return {RadioScenario(std::move(st), toy_spectrum(), std::move(locs), cfg), demand, reuse_one(B)};
}

Instance random_healing(std::uint64_t seed) {
  Rng rng(seed);
  const Grid g = toy_grid();
  std::vector<BaseStation> st;
  ReusePlan plan;
  for (int b = 0; b < 50; ++b) {
    const BsClass cls = rng.uniform() < 0.3 ? BsClass::Macro : BsClass::Micro;
    st.push_back(make_base_station("h" + std::to_string(b), "T", cls,
                                   {rng.uniform() * 2000, rng.uniform() * 2000}, g));
    if (rng.uniform() < 0.3)
      plan.push_back({3, static_cast<int>(rng.below(3))});
    else
      plan.push_back({1, 0});
  }
  std::vector<Location> locs;
  std::vector<double> demand;
  for (std::uint64_t l = 0; l < 300; ++l) {
    locs.push_back({{rng.uniform() * 2000, rng.uniform() * 2000}, l});
    demand.push_back(rng.uniform() < 0.1 ? 0.0 : rng.uniform() * 1e7);
  }
  RadioConfig cfg;
  cfg.macro_radius_m = 700;
  cfg.micro_radius_m = 300;
  cfg.los_seed = seed;
  return {RadioScenario(std::move(st), toy_spectrum(), std::move(locs), cfg), demand, plan};
}

Instance abs_only() {
  // The server sits 500 m from the location, the aggressor 100 m from it.
  const Point loc{600, 500};
  BaseStation s = macro("server", {100, 500});
  BaseStation j = macro("aggressor", {700, 500});
  s.coverage = square(loc, 20);
  j.coverage = square({750, 500}, 20);
  const double rb = 66;  // 12 MHz macro band
  const double r = ThroughputTable::reference().per_rb(30.0);
  // Half of what the server offers once the aggressor blanks: a quarter of
  // the time at full rate, after MIMO and 5 MHz of refarmed spectrum.
  const double demand = 0.5 * (rb + resource_blocks(5.0)) * 0.25 * r * 3.48;
  return {RadioScenario({s, j}, toy_spectrum(), {{loc, 0}}), {demand}, reuse_one(2)};
}

Instance comp_only() {
  const Point loc{499, 500};
  BaseStation s = macro("left", {0, 500});
  BaseStation a = macro("right", {1000, 500});
  // About -12 dB SNR each at 500 m; about -9 dB together.
  s.tx_power_dbm = a.tx_power_dbm = -22.0;
  s.coverage = square(loc, 30);
  a.coverage = square(loc, 30);
  const double rb = 66;
  const double noise_dbm = -174.0 + 10.0 * std::log10(12e6) + 9.0;
  auto rx = [&](Point b) {
    return std::pow(10.0, (-22.0 - oracle::macro_nlos_db(std::hypot(loc.x - b.x, loc.y - b.y), 0.7)) / 10.0);
  };
  const double joint_db = 10.0 * std::log10((rx(s.position) + rx(a.position)) /
                                            std::pow(10.0, noise_dbm / 10.0));
  const double r = ThroughputTable::reference().per_rb(joint_db, 3.48);
  const double demand = 0.5 * (rb + resource_blocks(5.0)) * r;
  return {RadioScenario({s, a}, toy_spectrum(), {{loc, 0}}), {demand}, reuse_one(2)};
}

}  // namespace celltrace::instances
