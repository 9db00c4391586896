#include "celltrace/reconstruct/delaunay.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <utility>

#include "celltrace/core/error.hpp"
#include "celltrace/core/polygon.hpp"

namespace celltrace {

namespace {

// > 0 when d lies strictly inside the circumcircle of CCW triangle (a, b, c).
double incircle(Point a, Point b, Point c, Point d) noexcept {
  const double adx = a.x - d.x, ady = a.y - d.y;
  const double bdx = b.x - d.x, bdy = b.y - d.y;
  const double cdx = c.x - d.x, cdy = c.y - d.y;
  const double ad = adx * adx + ady * ady;
  const double bd = bdx * bdx + bdy * bdy;
  const double cd = cdx * cdx + cdy * cdy;
  return adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) +
         ad * (bdx * cdy - bdy * cdx);
}

struct Tri {
  std::size_t v[3];
};

std::vector<std::set<std::size_t>> bowyer_watson(const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  double minx = pts[0].x, maxx = pts[0].x, miny = pts[0].y, maxy = pts[0].y;
  for (const Point& p : pts) {
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  const double span = std::max({maxx - minx, maxy - miny, 1.0});
  const Point mid{(minx + maxx) / 2, (miny + maxy) / 2};
  std::vector<Point> all = pts;
  all.push_back({mid.x - 1000 * span, mid.y - 1000 * span});
  all.push_back({mid.x + 1000 * span, mid.y - 1000 * span});
  all.push_back({mid.x, mid.y + 1000 * span});

  std::vector<Tri> tris{{{n, n + 1, n + 2}}};
  for (std::size_t i = 0; i < n; ++i) {
    const Point p = all[i];
    std::vector<Tri> keep;
    std::map<std::pair<std::size_t, std::size_t>, int> edge_count;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const Tri& t : tris) {
      if (incircle(all[t.v[0]], all[t.v[1]], all[t.v[2]], p) > 0.0) {
        for (int e = 0; e < 3; ++e) {
          const std::size_t a = t.v[e], b = t.v[(e + 1) % 3];
          edges.emplace_back(a, b);
          ++edge_count[{std::min(a, b), std::max(a, b)}];
        }
      } else {
        keep.push_back(t);
      }
    }
    for (const auto& [a, b] : edges) {
      if (edge_count[{std::min(a, b), std::max(a, b)}] != 1) continue;
      Tri t{{a, b, i}};
      if (orient(all[a], all[b], p) < 0.0) std::swap(t.v[0], t.v[1]);
      keep.push_back(t);
    }
    tris = std::move(keep);
  }

  std::vector<std::set<std::size_t>> adj(n);
  for (const Tri& t : tris) {
    for (int e = 0; e < 3; ++e) {
      const std::size_t a = t.v[e], b = t.v[(e + 1) % 3];
      if (a < n && b < n) {
        adj[a].insert(b);
        adj[b].insert(a);
      }
    }
  }
  // Hull edges are always Delaunay; the finite bounding triangle can hide
  // some of them on nearly flat hull chains.
  const std::vector<Point> hull = convex_hull(pts);
  std::map<std::pair<double, double>, std::size_t> where;
  for (std::size_t i = 0; i < n; ++i) where[{pts[i].x, pts[i].y}] = i;
  for (std::size_t h = 0; h < hull.size(); ++h) {
    const std::size_t a = where[{hull[h].x, hull[h].y}];
    const std::size_t b = where[{hull[(h + 1) % hull.size()].x, hull[(h + 1) % hull.size()].y}];
    if (a != b) {
      adj[a].insert(b);
      adj[b].insert(a);
    }
  }
  return adj;
}

bool all_collinear(const std::vector<Point>& pts) {
  if (pts.size() < 3) return true;
  // Farthest pair from the first point defines the candidate line.
  std::size_t far = 1;
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (distance(pts[0], pts[i]) > distance(pts[0], pts[far])) far = i;
  const double len = distance(pts[0], pts[far]);
  for (const Point& p : pts)
    if (std::abs(orient(pts[0], pts[far], p)) > 1e-9 * len * len) return false;
  return true;
}

}  // namespace

std::vector<std::vector<std::size_t>> delaunay_neighbors(std::span<const Point> points) {
  const std::size_t n = points.size();
  std::vector<std::vector<std::size_t>> result(n);
  if (n < 2) return result;

  // Collapse coincident points onto one representative.
  std::map<std::pair<double, double>, std::size_t> rep_of;
  std::vector<Point> unique_pts;
  std::vector<std::size_t> rep(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto key = std::make_pair(points[i].x, points[i].y);
    auto [it, inserted] = rep_of.emplace(key, unique_pts.size());
    if (inserted) unique_pts.push_back(points[i]);
    rep[i] = it->second;
  }

  std::vector<std::set<std::size_t>> adj(unique_pts.size());
  if (unique_pts.size() == 2) {
    adj[0].insert(1);
    adj[1].insert(0);
  } else if (unique_pts.size() > 2 && all_collinear(unique_pts)) {
    std::vector<std::size_t> order(unique_pts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return unique_pts[a].x < unique_pts[b].x ||
             (unique_pts[a].x == unique_pts[b].x && unique_pts[a].y < unique_pts[b].y);
    });
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
      adj[order[i]].insert(order[i + 1]);
      adj[order[i + 1]].insert(order[i]);
    }
  } else if (unique_pts.size() > 2) {
    adj = bowyer_watson(unique_pts);
  }

  std::vector<std::vector<std::size_t>> members(unique_pts.size());
  for (std::size_t i = 0; i < n; ++i) members[rep[i]].push_back(i);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t u : adj[rep[i]])
      for (std::size_t j : members[u]) result[i].push_back(j);
    for (std::size_t j : members[rep[i]])
      if (j != i) result[i].push_back(j);
    std::sort(result[i].begin(), result[i].end());
  }
  return result;
}

InterSiteDistances inter_site_distance(std::span<const BaseStation> stations, BsClass cls) {
  std::map<std::pair<std::string, std::string>, Point> sites;
  for (const BaseStation& bs : stations)
    if (bs.cls == cls) sites.emplace(std::make_pair(bs.op, bs.site_id), bs.position);

  std::map<std::string, std::vector<std::pair<std::string, Point>>> by_op;
  for (const auto& [key, pos] : sites) by_op[key.first].emplace_back(key.second, pos);

  InterSiteDistances out;
  bool any = false;
  for (const auto& [op, list] : by_op) {
    if (list.size() < 2) continue;
    any = true;
    std::vector<Point> pts;
    for (const auto& s : list) pts.push_back(s.second);
    const auto nbrs = delaunay_neighbors(pts);
    for (std::size_t i = 0; i < list.size(); ++i) {
      SiteDistance sd{list[i].first, op, list[i].second, nbrs[i].size(), 0.0};
      for (std::size_t j : nbrs[i]) sd.mean_neighbor_distance_m += distance(pts[i], pts[j]);
      if (!nbrs[i].empty()) sd.mean_neighbor_distance_m /= static_cast<double>(nbrs[i].size());
      out.sites.push_back(std::move(sd));
    }
  }
  if (!any)
    throw Error(ErrorCode::TooFewSites,
                std::string("need at least two ") + std::string(to_string(cls)) +
                    " sites of one operator");
  for (const auto& s : out.sites) {
    out.sorted_m.push_back(s.mean_neighbor_distance_m);
    out.mean_m += s.mean_neighbor_distance_m;
  }
  out.mean_m /= static_cast<double>(out.sites.size());
  std::sort(out.sorted_m.begin(), out.sorted_m.end());
  return out;
}

}  // namespace celltrace
