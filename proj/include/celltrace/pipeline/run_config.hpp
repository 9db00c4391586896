#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "celltrace/core/config.hpp"
#include "celltrace/demand/markov.hpp"
#include "celltrace/deploy/deployment.hpp"
#include "celltrace/plan/healing.hpp"
#include "celltrace/plan/projection.hpp"
#include "celltrace/radio/reuse.hpp"
#include "celltrace/radio/scenario.hpp"
#include "celltrace/reconstruct/placement.hpp"

namespace celltrace {

/// Everything one pipeline invocation needs. Relative paths in the file are
/// resolved against the directory holding it.
struct RunConfig {
  explicit RunConfig(CoreConfig c) : core(std::move(c)) {}

  CoreConfig core;
  std::filesystem::path trace;
  std::filesystem::path area_map;
  std::filesystem::path spectrum;
  std::filesystem::path throughput;  // empty: built-in 2x2 table
  std::filesystem::path out_dir;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> operators;  // empty: every operator with spectrum

  CellBuildOptions cells;
  PlacementOptions placement;
  MarkovOptions markov;
  int deploy_passes = 2;
  SitePlacement site_placement = SitePlacement::UniformInTile;
  int k = 10;
  bool validate_deployment = true;
  RadioConfig radio;
  bool flexible_reuse = true;
  ReuseOptions reuse;
  Projection projection;
  bool use_mobility = true;
  std::string strategies = "mimo,refarm5,refarm10,comp,abs";
  HealingOptions healing;

  /// Checks ranges and that every referenced file exists.
  /// Throws Error(ConfigError).
  void validate() const;
};

/// Throws Error(ConfigError) on unknown sections, bad values or a missing
/// file, Error(FileError) if the file cannot be read.
RunConfig load_run_config(const std::filesystem::path& path);

struct ConfigOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::filesystem::path> out_dir;
  std::optional<std::string> op;
  std::optional<double> tile_m;
  std::optional<int> k;
  std::optional<double> horizon_years;
  std::optional<std::string> strategies;
  std::optional<std::string> reuse;  // "flex" or "k1"
};

/// A new tile size keeps the extent and recomputes rows and columns
/// (rounded up).
void apply_overrides(RunConfig& cfg, const ConfigOverrides& o);

}  // namespace celltrace
