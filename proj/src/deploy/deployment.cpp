#include "celltrace/deploy/deployment.hpp"

#include <numeric>
#include <string>

#include "celltrace/core/error.hpp"
#include "celltrace/core/random.hpp"
#include "celltrace/ingest/csv.hpp"

namespace celltrace {

Deployment::Deployment(int rows, int cols, Provenance p)
    : rows_(rows), cols_(cols), provenance_(p) {
  if (rows <= 0 || cols <= 0) throw Error(ErrorCode::InvalidArgument, "empty deployment grid");
  counts_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

std::int64_t Deployment::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

void Deployment::neighbors(std::size_t i, std::vector<std::size_t>& out) const {
  out.clear();
  const TileId t = tile_at(i);
  for (int dr = -1; dr <= 1; ++dr) {
    for (int dc = -1; dc <= 1; ++dc) {
      if (dr == 0 && dc == 0) continue;
      const int r = t.row + dr, c = t.col + dc;
      if (r >= 0 && r < rows_ && c >= 0 && c < cols_) out.push_back(index({r, c}));
    }
  }
}

Deployment deployment_from(std::span<const BaseStation> stations, const Grid& grid, BsClass cls,
                           const std::optional<std::string>& op) {
  Deployment d(grid.rows(), grid.cols());
  for (const BaseStation& bs : stations)
    if (bs.cls == cls && (!op || bs.op == *op)) ++d.at(bs.tile);
  return d;
}

void write_deployment_csv(std::ostream& out, const Deployment& d) {
  out << "row,col,count\n";
  for (std::size_t i = 0; i < d.size(); ++i) {
    const TileId t = d.tile_at(i);
    out << t.row << ',' << t.col << ',' << d[i] << '\n';
  }
}

Deployment read_deployment_csv(std::istream& in, int rows, int cols, Provenance p) {
  std::string line;
  if (!std::getline(in, line) || csv::split_line(line) !=
                                     std::vector<std::string>{"row", "col", "count"})
    throw Error(ErrorCode::SchemaError, "deployment CSV header must be row,col,count");
  Deployment d(rows, cols, p);
  std::vector<bool> seen(d.size(), false);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto f = csv::split_line(line);
    const auto r = f.size() == 3 ? csv::parse_number<int>(f[0]) : std::nullopt;
    const auto c = f.size() == 3 ? csv::parse_number<int>(f[1]) : std::nullopt;
    const auto n = f.size() == 3 ? csv::parse_number<std::int32_t>(f[2]) : std::nullopt;
    if (!r || !c || !n || *r < 0 || *r >= rows || *c < 0 || *c >= cols || *n < 0)
      throw Error(ErrorCode::SchemaError, "bad deployment row at line " + std::to_string(line_no));
    const std::size_t i = d.index({*r, *c});
    if (seen[i])
      throw Error(ErrorCode::SchemaError, "duplicate tile at line " + std::to_string(line_no));
    seen[i] = true;
    d[i] = *n;
  }
  for (bool s : seen)
    if (!s) throw Error(ErrorCode::SchemaError, "deployment CSV does not cover every tile");
  return d;
}

std::vector<BaseStation> materialize(const Deployment& d, const Grid& grid, BsClass cls,
                                     const std::string& op, std::uint64_t seed,
                                     SitePlacement placement, const BsDefaults& defaults) {
  if (d.rows() != grid.rows() || d.cols() != grid.cols())
    throw Error(ErrorCode::GridMismatch, "deployment and grid differ in shape");
  Rng rng(seed);
  const double s = grid.tile_size_m();
  std::vector<BaseStation> out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const TileId t = d.tile_at(i);
    for (std::int32_t k = 0; k < d[i]; ++k) {
      Point p = grid.tile_center(t);
      if (placement == SitePlacement::UniformInTile)
        p = {(t.col + rng.uniform()) * s, (t.row + rng.uniform()) * s};
      const std::string id =
          "syn:" + std::to_string(t.row) + ":" + std::to_string(t.col) + ":" + std::to_string(k);
      BaseStation bs = make_base_station(id, op, cls, p, grid, defaults);
      bs.site_id = id;
      out.push_back(std::move(bs));
    }
  }
  return out;
}

}  // namespace celltrace
