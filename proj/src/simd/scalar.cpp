#include <cmath>

#include "celltrace/simd/kernels.hpp"

namespace celltrace::simd::detail {

namespace {

void distances(const double* xs, const double* ys, std::size_t n, double px,
               double py, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - px;
    const double dy = ys[i] - py;
    out[i] = std::sqrt(dx * dx + dy * dy);
  }
}

void masked_accumulate(double* acc, const double* values, const double* mask,
                       std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += values[i] * mask[i];
}

void argmax_update(double* best, std::int32_t* best_idx, const double* values,
                   std::int32_t idx, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (values[i] > best[i]) {
      best[i] = values[i];
      best_idx[i] = idx;
    }
  }
}

void count_inside_convex(const double* xs, const double* ys, std::size_t n,
                         const double* hx, const double* hy, std::size_t m,
                         std::int32_t* counts) {
  for (std::size_t i = 0; i < n; ++i) {
    bool inside = true;
    for (std::size_t e = 0; e < m && inside; ++e) {
      const std::size_t f = (e + 1 == m) ? 0 : e + 1;
      const double ex = hx[f] - hx[e];
      const double ey = hy[f] - hy[e];
      const double cross = ex * (ys[i] - hy[e]) - ey * (xs[i] - hx[e]);
      inside = cross >= 0.0;
    }
    if (inside) ++counts[i];
  }
}

double sum(const double* v, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += v[i];
  return s;
}

double sum_squared_diff(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

}  // namespace

const KernelTable& scalar_table() noexcept {
  static const KernelTable table{Isa::Scalar,  &distances, &masked_accumulate,
                                 &argmax_update, &count_inside_convex, &sum,
                                 &sum_squared_diff};
  return table;
}

}  // namespace celltrace::simd::detail
