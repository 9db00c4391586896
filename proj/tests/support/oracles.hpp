#pragma once

// Slow, direct reference computations used to cross-check the library.
// Nothing here calls into the code under test except for plain data types.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "celltrace/core/geo.hpp"

namespace oracle {

using celltrace::Point;

inline long double cross(Point o, Point a, Point b) {
  return (static_cast<long double>(a.x) - o.x) * (static_cast<long double>(b.y) - o.y) -
         (static_cast<long double>(a.y) - o.y) * (static_cast<long double>(b.x) - o.x);
}

/// Hull vertices as the endpoints of directed edges (i, j) with every other
/// point strictly left of them or on the closed segment. O(n^3).
inline std::vector<Point> brute_force_hull(const std::vector<Point>& pts) {
  std::vector<Point> uniq = pts;
  std::sort(uniq.begin(), uniq.end(),
            [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  std::set<std::pair<double, double>> verts;
  const std::size_t n = uniq.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      bool edge = true;
      for (std::size_t k = 0; k < n && edge; ++k) {
        if (k == i || k == j) continue;
        const long double c = cross(uniq[i], uniq[j], uniq[k]);
        if (c > 0) continue;
        if (c < 0) {
          edge = false;
          break;
        }
        const Point a = uniq[i], b = uniq[j], p = uniq[k];
        const bool within = std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
                            std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
        edge = within;
      }
      if (edge) {
        verts.insert({uniq[i].x, uniq[i].y});
        verts.insert({uniq[j].x, uniq[j].y});
      }
    }
  std::vector<Point> out;
  for (const auto& [x, y] : verts) out.push_back({x, y});
  return out;
}

/// Delaunay edges: (i, j) is an edge when some triangle (i, j, k) has no
/// other point strictly inside its circumcircle. Points in general position.
inline std::set<std::pair<std::size_t, std::size_t>> naive_delaunay_edges(
    const std::vector<Point>& p) {
  std::set<std::pair<std::size_t, std::size_t>> edges;
  const std::size_t n = p.size();
  auto in_circle = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    long double ax = p[a].x - p[d].x, ay = p[a].y - p[d].y;
    long double bx = p[b].x - p[d].x, by = p[b].y - p[d].y;
    long double cx = p[c].x - p[d].x, cy = p[c].y - p[d].y;
    long double det = (ax * ax + ay * ay) * (bx * cy - cx * by) -
                      (bx * bx + by * by) * (ax * cy - cx * ay) +
                      (cx * cx + cy * cy) * (ax * by - bx * ay);
    return det;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        long double o = cross(p[i], p[j], p[k]);
        if (o == 0) continue;
        std::size_t a = i, b = j, c = k;
        if (o < 0) std::swap(b, c);
        bool empty = true;
        for (std::size_t d = 0; d < n && empty; ++d) {
          if (d == i || d == j || d == k) continue;
          if (in_circle(a, b, c, d) > 0) empty = false;
        }
        if (!empty) continue;
        edges.insert({i, j});
        edges.insert({i, k});
        edges.insert({j, k});
      }
  return edges;
}

/// Largest d in [0, 100] with d * max <= 100 * rho, by counting down.
inline int normalized_delta(std::int64_t rho, std::int64_t max) {
  if (max == 0) return 0;
  for (int d = 100; d > 0; --d)
    if (static_cast<long double>(d) * max <= 100.0L * rho) return d;
  return 0;
}

/// Demand given as value[bs][slot], hours per slot.
using Matrix = std::vector<std::vector<double>>;

inline double rmse_hour(const Matrix& r, const Matrix& s, const std::vector<int>& hour_of_slot) {
  long double sq = 0;
  for (int h = 0; h < 24; ++h) {
    long double a = 0, b = 0;
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t k = 0; k < r[i].size(); ++k)
        if (hour_of_slot[k] == h) {
          a += r[i][k];
          b += s[i][k];
        }
    sq += (a - b) * (a - b);
  }
  return static_cast<double>(std::sqrt(sq / 24));
}

inline double rmse_bs(const Matrix& r, const Matrix& s) {
  long double sq = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    long double a = 0, b = 0;
    for (std::size_t k = 0; k < r[i].size(); ++k) {
      a += r[i][k];
      b += s[i][k];
    }
    sq += (a - b) * (a - b);
  }
  return static_cast<double>(std::sqrt(sq / r.size()));
}

inline double rmse_bs_slot(const Matrix& r, const Matrix& s) {
  long double sq = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t k = 0; k < r[i].size(); ++k, ++n) {
      const long double d = static_cast<long double>(r[i][k]) - s[i][k];
      sq += d * d;
    }
  return static_cast<double>(std::sqrt(sq / n));
}

/// P[X <= v] by counting.
inline double cdf_at(const std::vector<std::int64_t>& xs, std::int64_t v) {
  std::size_t c = 0;
  for (auto x : xs) c += x <= v;
  return static_cast<double>(c) / static_cast<double>(xs.size());
}

inline double ks(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  double best = 0;
  for (const auto* src : {&a, &b})
    for (auto v : *src) best = std::max(best, std::fabs(cdf_at(a, v) - cdf_at(b, v)));
  return best;
}

// Propagation written out from the model definitions.

inline double macro_nlos_db(double d, double f) {
  return 22.0 * std::log10(d) + 28.0 + 20.0 * std::log10(f);
}
inline double micro_nlos_db(double d, double f) {
  return 36.7 * std::log10(d) + 22.7 + 26.0 * std::log10(f);
}
inline double micro_los_db(double d, double f, double hbs, double hue) {
  return 40.0 * std::log10(d) + 7.8 - 18.0 * std::log10(hbs) - 18.0 * std::log10(hue) +
         2.0 * std::log10(f);
}

inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

struct Tx {
  Point pos;
  double tx_dbm;
  double f_ghz;
  double radius_m;
};

/// Omni macro links, one shared band, K = 1: the strongest covering BS
/// serves and every other BS interferes. Returns SINR in dB, NaN uncovered.
inline double macro_sinr_db(const std::vector<Tx>& bss, Point at, double noise_mw) {
  int best = -1;
  double best_mw = -1;
  std::vector<double> mw(bss.size());
  for (std::size_t b = 0; b < bss.size(); ++b) {
    const double d = std::max(1.0, std::hypot(at.x - bss[b].pos.x, at.y - bss[b].pos.y));
    mw[b] = dbm_to_mw(bss[b].tx_dbm - macro_nlos_db(d, bss[b].f_ghz));
    if (d <= bss[b].radius_m && mw[b] > best_mw) {
      best_mw = mw[b];
      best = static_cast<int>(b);
    }
  }
  if (best < 0) return std::nan("");
  double interference = 0;
  for (std::size_t b = 0; b < bss.size(); ++b)
    if (static_cast<int>(b) != best) interference += mw[b];
  return 10.0 * std::log10(best_mw / (noise_mw + interference));
}

/// Successor counts of a level sequence, counted pair by pair.
inline std::map<std::pair<int, int>, std::uint64_t> count_pairs(const std::vector<int>& seq) {
  std::map<std::pair<int, int>, std::uint64_t> out;
  for (std::size_t i = 1; i < seq.size(); ++i) ++out[{seq[i - 1], seq[i]}];
  return out;
}

/// Binomial +-3 sigma band for n trials at probability p.
inline std::pair<double, double> three_sigma(std::size_t n, double p) {
  const double mean = static_cast<double>(n) * p;
  const double sd = std::sqrt(static_cast<double>(n) * p * (1 - p));
  return {mean - 3 * sd, mean + 3 * sd};
}

}  // namespace oracle
