#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>

#include "celltrace/core/grid.hpp"

namespace celltrace::fixture {

struct Options {
  std::uint64_t seed = 2024;
  int slots = 168;
  std::size_t records = 2000;
};

/// Synthetic city on a 30 x 30 grid of 50 m tiles: two operators, 30 cells
/// (8 wide-area, 22 small), about 70 users and one week of hourly slots. A
/// few rows are deliberately broken so ingest has something to reject.
struct Fixture {
  std::string trace_csv;
  std::string areas_csv;
  nlohmann::ordered_json config;  // paths relative to data/fixture
};

Grid fixture_grid();
Fixture make_fixture(const Options& opts = {});

}  // namespace celltrace::fixture
