#include <doctest.h>

#include <sstream>

#include "celltrace/core/error.hpp"
#include "celltrace/core/random.hpp"
#include "celltrace/deploy/bayes.hpp"
#include "celltrace/deploy/deployment.hpp"
#include "celltrace/ingest/area_map.hpp"

using namespace celltrace;

namespace {

AreaMap halves(int rows, int cols) {
  std::vector<AreaType> t(static_cast<std::size_t>(rows * cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      t[static_cast<std::size_t>(r * cols + c)] = c < cols / 2 ? AreaType::Urban : AreaType::Rural;
  return AreaMap(rows, cols, t);
}

Deployment random_deployment(int rows, int cols, std::uint64_t seed) {
  Rng rng(seed);
  Deployment d(rows, cols);
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = static_cast<std::int32_t>(rng.below(4)) * (rng.uniform() < 0.4);
  return d;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("beta is the ceiling of the neighbor mean") {
  CHECK(beta_of(0, 8) == 0);
  CHECK(beta_of(1, 8) == 1);
  CHECK(beta_of(8, 8) == 1);
  CHECK(beta_of(9, 8) == 2);
  CHECK(beta_of(5, 0) == 0);
}

TEST_CASE("training counts tiles by area and neighbor context") {
  const Deployment d = random_deployment(12, 9, 3);
  const AreaMap am = halves(12, 9);
  const DeployModel m = train_deployment(d, am);
  std::map<std::tuple<AreaType, int, int>, std::uint64_t> expected;
  for (int r = 0; r < 12; ++r)
    for (int c = 0; c < 9; ++c) {
      std::int64_t sum = 0, n = 0;
      for (int dr = -1; dr <= 1; ++dr)
        for (int dc = -1; dc <= 1; ++dc) {
          if ((dr == 0 && dc == 0) || r + dr < 0 || r + dr >= 12 || c + dc < 0 || c + dc >= 9) continue;
          sum += d.at({r + dr, c + dc});
          ++n;
        }
      const int beta = static_cast<int>((sum + n - 1) / n);
      ++expected[{am.at({r, c}), beta, d.at({r, c})}];
    }
  std::uint64_t total = 0;
  for (const auto& [key, n] : expected) {
    REQUIRE(m.count(std::get<0>(key), std::get<1>(key), std::get<2>(key)) == n);
    total += n;
  }
  for (const auto& [ctx, row] : m.counters())
    for (const auto& [b, n] : row) total -= n;
  CHECK(total == 0);
  CHECK(code_of([&] { train_deployment(d, halves(9, 12)); }) == ErrorCode::GridMismatch);
}

TEST_CASE("generation is seeded") {
  const AreaMap am = halves(20, 20);
  const DeployModel m = train_deployment(random_deployment(20, 20, 1), am);
  const Deployment a = generate_deployment(m, am, 7);
  const Deployment b = generate_deployment(m, am, 7);
  const Deployment c = generate_deployment(m, am, 8);
  CHECK(a == b);
  CHECK_FALSE(a == c);
  CHECK(a.provenance() == Provenance::Synthetic);
  CHECK_FALSE(generate_deployment(m, am, 7, 1) == generate_deployment(m, am, 7, 3));
}

TEST_CASE("unseen contexts fall back to the nearest beta") {
  DeployModel m;
  m.add(AreaType::Urban, 0, 1, 5);
  const AreaMap am = AreaMap::constant(Grid({37.7, -122.5}, 6, 6), AreaType::Urban);
  DeployGenerationStats st;
  const Deployment d = generate_deployment(m, am, 1, 2, &st);
  for (std::size_t i = 0; i < d.size(); ++i) CHECK(d[i] == 1);
  CHECK(st.nearest_beta > 0);
  CHECK(st.uniform == 0);
}

TEST_CASE("an untrained area draws from the observed values") {
  DeployModel m;
  m.add(AreaType::Urban, 0, 2, 5);
  m.add(AreaType::Urban, 1, 0, 5);
  const AreaMap am = AreaMap::constant(Grid({37.7, -122.5}, 4, 4), AreaType::Rural);
  DeployGenerationStats st;
  const Deployment d = generate_deployment(m, am, 1, 1, &st);
  CHECK(st.uniform == d.size());
  for (std::size_t i = 0; i < d.size(); ++i) CHECK((d[i] == 0 || d[i] == 2));
  CHECK(code_of([&] { generate_deployment(DeployModel{}, am, 1); }) == ErrorCode::UnseenContext);
}

TEST_CASE("model and deployment files round-trip") {
  const AreaMap am = halves(5, 5);
  const Deployment d = random_deployment(5, 5, 9);
  const DeployModel m = train_deployment(d, am);
  std::stringstream js;
  m.to_json(js);
  CHECK(DeployModel::from_json(js) == m);
  std::stringstream csv;
  write_deployment_csv(csv, d);
  CHECK(read_deployment_csv(csv, 5, 5) == d);
}

TEST_CASE("deployments from stations and back") {
  const Grid g({37.7, -122.5}, 10, 10);
  std::vector<BaseStation> st{
      make_base_station("a", "A", BsClass::Macro, {10, 10}, g),
      make_base_station("b", "A", BsClass::Macro, {20, 30}, g),
      make_base_station("c", "B", BsClass::Macro, {260, 10}, g),
      make_base_station("d", "A", BsClass::Micro, {260, 10}, g),
  };
  const Deployment all = deployment_from(st, g, BsClass::Macro);
  CHECK(all.at({0, 0}) == 2);
  CHECK(all.at({0, 5}) == 1);
  CHECK(all.total() == 3);
  CHECK(deployment_from(st, g, BsClass::Macro, std::string("B")).total() == 1);
  CHECK(deployment_from(st, g, BsClass::Micro).at({0, 5}) == 1);

  Deployment d(10, 10, Provenance::Synthetic);
  d.at({3, 4}) = 3;
  d.at({9, 9}) = 1;
  const auto placed = materialize(d, g, BsClass::Micro, "A", 42);
  REQUIRE(placed.size() == 4);
  for (const auto& bs : placed) {
    CHECK(g.to_tile(bs.position) == bs.tile);
    CHECK(bs.coverage.empty());
  }
  CHECK(placed[0].id == "syn:3:4:0");
  const auto centered = materialize(d, g, BsClass::Micro, "A", 42, SitePlacement::TileCenter);
  CHECK(centered[0].position == g.tile_center({3, 4}));
  const auto again = materialize(d, g, BsClass::Micro, "A", 42);
  CHECK(again[2].position == placed[2].position);
  CHECK(deployment_from(placed, g, BsClass::Micro).counts() == d.counts());
}
