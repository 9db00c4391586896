#include "celltrace/simd/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

#include <cmath>

namespace celltrace::simd::detail {

namespace {

void distances(const double* xs, const double* ys, std::size_t n, double px,
               double py, double* out) {
  const float64x2_t vpx = vdupq_n_f64(px);
  const float64x2_t vpy = vdupq_n_f64(py);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t dx = vsubq_f64(vld1q_f64(xs + i), vpx);
    const float64x2_t dy = vsubq_f64(vld1q_f64(ys + i), vpy);
    const float64x2_t d2 = vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy));
    vst1q_f64(out + i, vsqrtq_f64(d2));
  }
  for (; i < n; ++i) {
    const double dx = xs[i] - px;
    const double dy = ys[i] - py;
    out[i] = std::sqrt(dx * dx + dy * dy);
  }
}

void masked_accumulate(double* acc, const double* values, const double* mask,
                       std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t prod = vmulq_f64(vld1q_f64(values + i), vld1q_f64(mask + i));
    vst1q_f64(acc + i, vaddq_f64(vld1q_f64(acc + i), prod));
  }
  for (; i < n; ++i) acc[i] += values[i] * mask[i];
}

void argmax_update(double* best, std::int32_t* best_idx, const double* values,
                   std::int32_t idx, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t v = vld1q_f64(values + i);
    const float64x2_t b = vld1q_f64(best + i);
    const uint64x2_t gt = vcgtq_f64(v, b);
    vst1q_f64(best + i, vbslq_f64(gt, v, b));
    if (vgetq_lane_u64(gt, 0)) best_idx[i] = idx;
    if (vgetq_lane_u64(gt, 1)) best_idx[i + 1] = idx;
  }
  for (; i < n; ++i) {
    if (values[i] > best[i]) {
      best[i] = values[i];
      best_idx[i] = idx;
    }
  }
}

void count_inside_convex(const double* xs, const double* ys, std::size_t n,
                         const double* hx, const double* hy, std::size_t m,
                         std::int32_t* counts) {
  const float64x2_t zero = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t px = vld1q_f64(xs + i);
    const float64x2_t py = vld1q_f64(ys + i);
    uint64x2_t inside = vdupq_n_u64(~std::uint64_t{0});
    for (std::size_t e = 0; e < m; ++e) {
      const std::size_t f = (e + 1 == m) ? 0 : e + 1;
      const float64x2_t cross =
          vsubq_f64(vmulq_f64(vdupq_n_f64(hx[f] - hx[e]), vsubq_f64(py, vdupq_n_f64(hy[e]))),
                    vmulq_f64(vdupq_n_f64(hy[f] - hy[e]), vsubq_f64(px, vdupq_n_f64(hx[e]))));
      inside = vandq_u64(inside, vcgeq_f64(cross, zero));
    }
    if (vgetq_lane_u64(inside, 0)) ++counts[i];
    if (vgetq_lane_u64(inside, 1)) ++counts[i + 1];
  }
  for (; i < n; ++i) {
    bool in = true;
    for (std::size_t e = 0; e < m && in; ++e) {
      const std::size_t f = (e + 1 == m) ? 0 : e + 1;
      in = (hx[f] - hx[e]) * (ys[i] - hy[e]) - (hy[f] - hy[e]) * (xs[i] - hx[e]) >= 0.0;
    }
    if (in) ++counts[i];
  }
}

double sum(const double* v, std::size_t n) {
  float64x2_t a0 = vdupq_n_f64(0.0);
  float64x2_t a1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    a0 = vaddq_f64(a0, vld1q_f64(v + i));
    a1 = vaddq_f64(a1, vld1q_f64(v + i + 2));
  }
  double s = vaddvq_f64(vaddq_f64(a0, a1));
  for (; i < n; ++i) s += v[i];
  return s;
}

double sum_squared_diff(const double* a, const double* b, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t d = vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
    acc = vaddq_f64(acc, vmulq_f64(d, d));
  }
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

}  // namespace

const KernelTable* neon_table() noexcept {
  static const KernelTable table{Isa::Neon,    &distances, &masked_accumulate,
                                 &argmax_update, &count_inside_convex, &sum,
                                 &sum_squared_diff};
  return &table;
}

}  // namespace celltrace::simd::detail

#else

namespace celltrace::simd::detail {
const KernelTable* neon_table() noexcept { return nullptr; }
}  // namespace celltrace::simd::detail

#endif
