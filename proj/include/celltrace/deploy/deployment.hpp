#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "celltrace/core/grid.hpp"
#include "celltrace/core/types.hpp"
#include "celltrace/ingest/area_map.hpp"

namespace celltrace {

enum class Provenance : std::uint8_t { Real, Synthetic };

/// B(t): number of BSs per synthesis tile.
class Deployment {
 public:
  Deployment() = default;
  Deployment(int rows, int cols, Provenance p = Provenance::Real);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return counts_.size(); }
  Provenance provenance() const noexcept { return provenance_; }

  std::int32_t& at(TileId t) noexcept { return counts_[index(t)]; }
  std::int32_t at(TileId t) const noexcept { return counts_[index(t)]; }
  std::int32_t& operator[](std::size_t i) noexcept { return counts_[i]; }
  std::int32_t operator[](std::size_t i) const noexcept { return counts_[i]; }
  const std::vector<std::int32_t>& counts() const noexcept { return counts_; }
  std::int64_t total() const noexcept;

  std::size_t index(TileId t) const noexcept {
    return static_cast<std::size_t>(t.row) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(t.col);
  }
  TileId tile_at(std::size_t i) const noexcept {
    return {static_cast<int>(i / static_cast<std::size_t>(cols_)),
            static_cast<int>(i % static_cast<std::size_t>(cols_))};
  }

  /// Moore 8-neighborhood clipped at the extent, as linear indices.
  void neighbors(std::size_t i, std::vector<std::size_t>& out) const;

  friend bool operator==(const Deployment&, const Deployment&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  Provenance provenance_ = Provenance::Real;
  std::vector<std::int32_t> counts_;
};

/// B(t) of the BSs of class `cls` (all operators unless `op` is given).
Deployment deployment_from(std::span<const BaseStation> stations, const Grid& grid, BsClass cls,
                           const std::optional<std::string>& op = std::nullopt);

/// ceil(sum / n) with integers; 0 for an empty set.
inline std::int32_t beta_of(std::int64_t sum, std::int64_t n) noexcept {
  return n == 0 ? 0 : static_cast<std::int32_t>((sum + n - 1) / n);
}

/// CSV `row,col,count`, every tile in row-major order.
void write_deployment_csv(std::ostream& out, const Deployment& d);
Deployment read_deployment_csv(std::istream& in, int rows, int cols,
                               Provenance p = Provenance::Real);

enum class SitePlacement : std::uint8_t { UniformInTile, TileCenter };

/// Positions B(t) BSs per tile, either uniformly inside the tile or at its
/// center. Ids are "syn:<row>:<col>:<i>".
std::vector<BaseStation> materialize(const Deployment& d, const Grid& grid, BsClass cls,
                                     const std::string& op, std::uint64_t seed,
                                     SitePlacement placement = SitePlacement::UniformInTile,
                                     const BsDefaults& defaults = {});

}  // namespace celltrace
