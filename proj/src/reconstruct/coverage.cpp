#include "celltrace/reconstruct/coverage.hpp"

#include <algorithm>
#include <cmath>

#include "celltrace/simd/kernels.hpp"

namespace celltrace {

CoverageRaster coverage_density(std::span<const CellRecord> cells, const Grid& grid) {
  CoverageRaster raster;
  raster.rows = grid.analysis_rows();
  raster.cols = grid.analysis_cols();
  raster.cell_m = grid.analysis_cell_m();
  raster.counts.assign(grid.analysis_count(), 0);

  const double s = raster.cell_m;
  std::vector<double> xs(static_cast<std::size_t>(raster.cols));
  for (int c = 0; c < raster.cols; ++c) xs[static_cast<std::size_t>(c)] = (c + 0.5) * s;
  std::vector<double> ys;
  std::vector<double> hx;
  std::vector<double> hy;
  const auto& k = simd::kernels();

  for (const CellRecord& cell : cells) {
    if (cell.degenerate) continue;
    hx.clear();
    hy.clear();
    double minx = cell.hull[0].x, maxx = minx, miny = cell.hull[0].y, maxy = miny;
    for (const Point& p : cell.hull) {
      hx.push_back(p.x);
      hy.push_back(p.y);
      minx = std::min(minx, p.x);
      maxx = std::max(maxx, p.x);
      miny = std::min(miny, p.y);
      maxy = std::max(maxy, p.y);
    }
    // Bounding box of candidate centers (i + 0.5) * s, padded by one cell;
    // the kernel does the exact test.
    const int c0 = std::max(0, static_cast<int>(std::floor(minx / s - 0.5)));
    const int c1 = std::min(raster.cols - 1, static_cast<int>(std::ceil(maxx / s - 0.5)));
    const int r0 = std::max(0, static_cast<int>(std::floor(miny / s - 0.5)));
    const int r1 = std::min(raster.rows - 1, static_cast<int>(std::ceil(maxy / s - 0.5)));
    if (c0 > c1 || r0 > r1) continue;
    const std::size_t width = static_cast<std::size_t>(c1 - c0 + 1);
    ys.assign(width, 0.0);
    for (int r = r0; r <= r1; ++r) {
      std::fill(ys.begin(), ys.end(), (r + 0.5) * s);
      std::int32_t* row = raster.counts.data() +
                          static_cast<std::size_t>(r) * static_cast<std::size_t>(raster.cols) +
                          static_cast<std::size_t>(c0);
      k.count_inside_convex(xs.data() + c0, ys.data(), width, hx.data(), hy.data(), hx.size(),
                            row);
    }
  }
  return raster;
}

}  // namespace celltrace
