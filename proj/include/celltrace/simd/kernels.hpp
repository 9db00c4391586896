#pragma once

// Data-parallel inner loops shared by the radio and geometry modules.
//
// Every kernel exists as a scalar reference and as SIMD variants (AVX2 on
// x86-64, NEON on AArch64). The variant is selected once at runtime from the
// CPU features, or forced through set_active_isa() / CELLTRACE_SIMD
// (scalar|avx2|neon|auto). Elementwise kernels are bit-identical to the
// scalar reference; the two reductions differ only by summation order.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace celltrace::simd {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa) noexcept;

struct KernelTable {
  Isa isa;
  /// out[i] = |(xs[i], ys[i]) - (px, py)|
  void (*distances)(const double* xs, const double* ys, std::size_t n, double px,
                    double py, double* out);
  /// acc[i] += values[i] * mask[i]
  void (*masked_accumulate)(double* acc, const double* values, const double* mask,
                            std::size_t n);
  /// Where values[i] > best[i]: best[i] = values[i], best_idx[i] = idx.
  void (*argmax_update)(double* best, std::int32_t* best_idx, const double* values,
                        std::int32_t idx, std::size_t n);
  /// counts[i] += 1 where point i lies inside or on the convex CCW polygon
  /// (hx, hy) with m >= 3 vertices.
  void (*count_inside_convex)(const double* xs, const double* ys, std::size_t n,
                              const double* hx, const double* hy, std::size_t m,
                              std::int32_t* counts);
  double (*sum)(const double* v, std::size_t n);
  double (*sum_squared_diff)(const double* a, const double* b, std::size_t n);
};

bool isa_supported(Isa isa) noexcept;
/// Best ISA the running CPU supports.
Isa detect_isa() noexcept;
/// Throws Error(InvalidArgument) when `isa` is unavailable on this CPU.
const KernelTable& kernels_for(Isa isa);
const KernelTable& kernels() noexcept;
Isa active_isa() noexcept;
void set_active_isa(Isa isa);

// Span conveniences over the active table.

inline void distances(std::span<const double> xs, std::span<const double> ys,
                      double px, double py, std::span<double> out) {
  kernels().distances(xs.data(), ys.data(), out.size(), px, py, out.data());
}

inline void masked_accumulate(std::span<double> acc, std::span<const double> values,
                              std::span<const double> mask) {
  kernels().masked_accumulate(acc.data(), values.data(), mask.data(), acc.size());
}

inline void argmax_update(std::span<double> best, std::span<std::int32_t> best_idx,
                          std::span<const double> values, std::int32_t idx) {
  kernels().argmax_update(best.data(), best_idx.data(), values.data(), idx,
                          best.size());
}

inline double sum(std::span<const double> v) { return kernels().sum(v.data(), v.size()); }

inline double sum_squared_diff(std::span<const double> a, std::span<const double> b) {
  return kernels().sum_squared_diff(a.data(), b.data(), a.size());
}

namespace detail {
const KernelTable& scalar_table() noexcept;
const KernelTable* avx2_table() noexcept;  // nullptr when not compiled in
const KernelTable* neon_table() noexcept;
}  // namespace detail

}  // namespace celltrace::simd
