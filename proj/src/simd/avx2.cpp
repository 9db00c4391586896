// Compiled with -mavx2 only; never called unless the CPU reports AVX2.

#include "celltrace/simd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

#include <cmath>

namespace celltrace::simd::detail {

namespace {

void distances(const double* xs, const double* ys, std::size_t n, double px,
               double py, double* out) {
  const __m256d vpx = _mm256_set1_pd(px);
  const __m256d vpy = _mm256_set1_pd(py);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vpx);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), vpy);
    const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    _mm256_storeu_pd(out + i, _mm256_sqrt_pd(d2));
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
  for (; i + 4 <= n; i += 4) {
    const __m256d prod =
        _mm256_mul_pd(_mm256_loadu_pd(values + i), _mm256_loadu_pd(mask + i));
    _mm256_storeu_pd(acc + i, _mm256_add_pd(_mm256_loadu_pd(acc + i), prod));
  }
  for (; i < n; ++i) acc[i] += values[i] * mask[i];
}

void argmax_update(double* best, std::int32_t* best_idx, const double* values,
                   std::int32_t idx, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(values + i);
    const __m256d b = _mm256_loadu_pd(best + i);
    const __m256d gt = _mm256_cmp_pd(v, b, _CMP_GT_OQ);
    const int bits = _mm256_movemask_pd(gt);
    if (bits == 0) continue;
    _mm256_storeu_pd(best + i, _mm256_blendv_pd(b, v, gt));
    for (int lane = 0; lane < 4; ++lane)
      if (bits & (1 << lane)) best_idx[i + static_cast<std::size_t>(lane)] = idx;
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
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d px = _mm256_loadu_pd(xs + i);
    const __m256d py = _mm256_loadu_pd(ys + i);
    __m256d inside = _mm256_castsi256_pd(_mm256_set1_epi64x(-1));
    for (std::size_t e = 0; e < m; ++e) {
      const std::size_t f = (e + 1 == m) ? 0 : e + 1;
      const __m256d ex = _mm256_set1_pd(hx[f] - hx[e]);
      const __m256d ey = _mm256_set1_pd(hy[f] - hy[e]);
      const __m256d ax = _mm256_set1_pd(hx[e]);
      const __m256d ay = _mm256_set1_pd(hy[e]);
      const __m256d cross =
          _mm256_sub_pd(_mm256_mul_pd(ex, _mm256_sub_pd(py, ay)),
                        _mm256_mul_pd(ey, _mm256_sub_pd(px, ax)));
      inside = _mm256_and_pd(inside, _mm256_cmp_pd(cross, zero, _CMP_GE_OQ));
      if (_mm256_movemask_pd(inside) == 0) break;
    }
    const int bits = _mm256_movemask_pd(inside);
    for (int lane = 0; lane < 4; ++lane)
      if (bits & (1 << lane)) ++counts[i + static_cast<std::size_t>(lane)];
  }
  for (; i < n; ++i) {
    bool in = true;
    for (std::size_t e = 0; e < m && in; ++e) {
      const std::size_t f = (e + 1 == m) ? 0 : e + 1;
      const double ex = hx[f] - hx[e];
      const double ey = hy[f] - hy[e];
      in = ex * (ys[i] - hy[e]) - ey * (xs[i] - hx[e]) >= 0.0;
    }
    if (in) ++counts[i];
  }
}

double horizontal_sum(__m256d v) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, v);
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

double sum(const double* v, std::size_t n) {
  __m256d a0 = _mm256_setzero_pd();
  __m256d a1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    a0 = _mm256_add_pd(a0, _mm256_loadu_pd(v + i));
    a1 = _mm256_add_pd(a1, _mm256_loadu_pd(v + i + 4));
  }
  double s = horizontal_sum(_mm256_add_pd(a0, a1));
  for (; i < n; ++i) s += v[i];
  return s;
}

double sum_squared_diff(const double* a, const double* b, std::size_t n) {
  __m256d a0 = _mm256_setzero_pd();
  __m256d a1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d d0 = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    const __m256d d1 =
        _mm256_sub_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4));
    a0 = _mm256_add_pd(a0, _mm256_mul_pd(d0, d0));
    a1 = _mm256_add_pd(a1, _mm256_mul_pd(d1, d1));
  }
  double s = horizontal_sum(_mm256_add_pd(a0, a1));
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

}  // namespace

const KernelTable* avx2_table() noexcept {
  static const KernelTable table{Isa::Avx2,    &distances, &masked_accumulate,
                                 &argmax_update, &count_inside_convex, &sum,
                                 &sum_squared_diff};
  return &table;
}

}  // namespace celltrace::simd::detail

#else

namespace celltrace::simd::detail {
const KernelTable* avx2_table() noexcept { return nullptr; }
}  // namespace celltrace::simd::detail

#endif
