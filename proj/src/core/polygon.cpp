#include "celltrace/core/polygon.hpp"

#include <algorithm>
#include <cmath>

namespace celltrace {

std::vector<Point> convex_hull(std::span<const Point> points) {
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](Point a, Point b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;

  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) {
    // Collinear input collapses to its two extreme points.
    return {pts.front(), pts.back()};
  }
  return hull;
}

double polygon_area(std::span<const Point> poly) noexcept {
  if (poly.size() < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % poly.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return std::abs(twice) * 0.5;
}

double polygon_perimeter(std::span<const Point> poly) noexcept {
  if (poly.size() < 2) return 0.0;
  double p = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i)
    p += distance(poly[i], poly[(i + 1) % poly.size()]);
  return p;
}

Point polygon_centroid(std::span<const Point> poly) noexcept {
  if (poly.empty()) return {};
  double twice = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  // Shift to the first vertex to limit cancellation on projected coordinates.
  const Point o = poly[0];
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point a{poly[i].x - o.x, poly[i].y - o.y};
    const Point& nb = poly[(i + 1) % poly.size()];
    const Point b{nb.x - o.x, nb.y - o.y};
    const double c = a.x * b.y - b.x * a.y;
    twice += c;
    cx += (a.x + b.x) * c;
    cy += (a.y + b.y) * c;
  }
  if (poly.size() < 3 || std::abs(twice) < 1e-12) {
    Point m{};
    for (const Point& p : poly) {
      m.x += p.x;
      m.y += p.y;
    }
    return {m.x / static_cast<double>(poly.size()), m.y / static_cast<double>(poly.size())};
  }
  return {o.x + cx / (3.0 * twice), o.y + cy / (3.0 * twice)};
}

bool convex_contains(std::span<const Point> ccw_hull, Point p) noexcept {
  const std::size_t m = ccw_hull.size();
  if (m < 3) return false;
  for (std::size_t e = 0; e < m; ++e) {
    const Point& a = ccw_hull[e];
    const Point& b = ccw_hull[(e + 1 == m) ? 0 : e + 1];
    const double cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
    if (cross < 0.0) return false;
  }
  return true;
}

bool polygon_contains(std::span<const Point> ring, Point p) noexcept {
  bool inside = false;
  const std::size_t n = ring.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point& a = ring[i];
    const Point& b = ring[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x;
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

double diameter(std::span<const Point> points) {
  if (points.size() < 2) return 0.0;
  const std::vector<Point> hull = convex_hull(points);
  double best = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i)
    for (std::size_t j = i + 1; j < hull.size(); ++j)
      best = std::max(best, distance(hull[i], hull[j]));
  return best;
}

}  // namespace celltrace
