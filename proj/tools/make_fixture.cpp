// Regenerates data/fixture from the deterministic fixture generator.
#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "fixture.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Write the bundled synthetic fixture"};
  std::string dir = "data/fixture";
  std::uint64_t seed = celltrace::fixture::Options{}.seed;
  app.add_option("--dir", dir, "Target directory");
  app.add_option("--seed", seed, "Generator seed");
  CLI11_PARSE(app, argc, argv);

  celltrace::fixture::Options opts;
  opts.seed = seed;
  const auto fx = celltrace::fixture::make_fixture(opts);
  std::filesystem::create_directories(dir);
  const std::filesystem::path d(dir);
  std::ofstream(d / "trace.csv", std::ios::binary) << fx.trace_csv;
  std::ofstream(d / "areas.csv", std::ios::binary) << fx.areas_csv;
  std::ofstream(d / "config.json", std::ios::binary) << fx.config.dump(2) << '\n';
  std::cout << "wrote " << (d / "trace.csv").string() << '\n';
  return 0;
}
