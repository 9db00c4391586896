#pragma once

#include <span>
#include <vector>

#include "celltrace/core/geo.hpp"

namespace celltrace {

/// Twice the signed area of triangle (a, b, c); positive when CCW.
inline double orient(Point a, Point b, Point c) noexcept {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

/// Convex hull by monotone chain. Returns CCW vertices without collinear
/// points, starting at the lowest (x, y). Fewer than three vertices means the
/// input is degenerate (empty, a point, or collinear).
std::vector<Point> convex_hull(std::span<const Point> points);

double polygon_area(std::span<const Point> poly) noexcept;
/// Closed-ring perimeter; for two vertices this is twice the segment length.
double polygon_perimeter(std::span<const Point> poly) noexcept;
/// Area centroid; falls back to the vertex mean for zero-area input.
Point polygon_centroid(std::span<const Point> poly) noexcept;

/// Inside-or-on-boundary test for a CCW convex polygon with >= 3 vertices.
bool convex_contains(std::span<const Point> ccw_hull, Point p) noexcept;
/// Even-odd rule for a simple polygon (any orientation).
bool polygon_contains(std::span<const Point> ring, Point p) noexcept;

/// Largest pairwise distance within `points`.
double diameter(std::span<const Point> points);

}  // namespace celltrace
