#include "celltrace/reconstruct/cells.hpp"

#include <algorithm>
#include <cmath>

#include "celltrace/core/error.hpp"
#include "celltrace/core/polygon.hpp"

namespace celltrace {

double roundness(std::span<const Point> hull) {
  if (hull.size() < 3)
    throw Error(ErrorCode::DegenerateCell, "roundness needs a hull with at least 3 vertices");
  const double a = polygon_area(hull);
  const double p = polygon_perimeter(hull);
  return std::clamp(4.0 * kPi * a / (p * p), 0.0, 1.0);
}

double roundness(const CellRecord& cell) {
  if (cell.degenerate)
    throw Error(ErrorCode::DegenerateCell,
                "cell " + cell.key.op + "/" + cell.key.cell_id + " is degenerate");
  return roundness(cell.hull);
}

BsClass classify_cell(const CellRecord& cell, double watershed_m) noexcept {
  return cell.range_m > watershed_m ? BsClass::Macro : BsClass::Micro;
}

std::vector<CellRecord> build_cells(const TraceTable& trace, const CellBuildOptions& opts) {
  std::vector<CellRecord> cells;
  for (const auto& [key, indices] : trace.by_cell()) {
    CellRecord cell;
    cell.key = key;
    for (std::size_t i : indices) {
      const TraceRecord& r = trace.records()[i];
      if (opts.lte_only && r.tech != Tech::LTE) continue;
      cell.samples.push_back(r.position);
    }
    if (cell.samples.empty()) continue;

    cell.hull = convex_hull(cell.samples);
    cell.degenerate = cell.hull.size() < 3;
    cell.area_m2 = polygon_area(cell.hull);
    cell.perimeter_m = polygon_perimeter(cell.hull);
    if (cell.degenerate) {
      cell.barycenter = polygon_centroid(cell.samples);
      for (const Point& p : cell.samples)
        cell.range_m = std::max(cell.range_m, distance(cell.barycenter, p));
    } else {
      cell.barycenter = polygon_centroid(cell.hull);
      for (const Point& v : cell.hull)
        cell.range_m = std::max(cell.range_m, distance(cell.barycenter, v));
      cell.roundness = roundness(cell.hull);
    }
    cell.cls = classify_cell(cell, opts.macro_watershed_m);
    cells.push_back(std::move(cell));
  }
  return cells;
}

}  // namespace celltrace
