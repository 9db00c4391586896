#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "celltrace/demand/markov.hpp"
#include "celltrace/ingest/area_map.hpp"
#include "celltrace/ingest/trace.hpp"
#include "celltrace/reconstruct/cells.hpp"
#include "celltrace/reconstruct/placement.hpp"
#include "celltrace/validate/deploy_stats.hpp"

namespace celltrace {

/// User-based split: fold(u) = H(seed, u) mod k, so every user lands in each
/// fold with probability 1/k independently of the others.
class FoldAssignment {
 public:
  /// Throws Error(InvalidK) for k < 2.
  FoldAssignment(int k, std::uint64_t seed);

  int k() const noexcept { return k_; }
  std::uint64_t seed() const noexcept { return seed_; }
  int fold_of(std::string_view user_id) const noexcept;

 private:
  int k_;
  std::uint64_t seed_;
};

struct CrossValidationOptions {
  int k = 10;
  std::uint64_t seed = 0;
  MarkovOptions markov;
  int deploy_passes = 2;
  CellBuildOptions cells;
  PlacementOptions placement;
  bool deployment = true;
};

struct FidelityReport {
  int k = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> fold_users;  // users per fold
  double rmse_hour = 0.0;
  double rmse_b = 0.0;
  double rmse_bk = 0.0;
  std::array<double, 24> profile_real{};
  std::array<double, 24> profile_synth{};
  std::vector<std::string> bs_ids;
  std::vector<double> totals_real;
  std::vector<double> totals_synth;
  /// Per BS class, when deployments were compared.
  std::map<BsClass, DeploymentStats> deployment;
};

/// For each fold: rebuild demand (and the BS deployment) from the other
/// folds' users, train both models and generate a synthetic trace for the
/// full set of BSs reconstructed from the whole trace. The k synthetic
/// traces are combined by the per-entry mean rounded to the nearest integer
/// and scored against the real trace.
/// Throws Error(UsersAbsent) when records lack user ids.
FidelityReport cross_validate(const TraceTable& trace, const Grid& grid, const AreaMap& areas,
                              const CrossValidationOptions& opts);

/// Combines equally shaped matrices or deployments by the rounded mean.
DemandMatrix combine_mean(std::span<const DemandMatrix> runs);
Deployment combine_mean(std::span<const Deployment> runs);

}  // namespace celltrace
