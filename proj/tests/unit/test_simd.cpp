#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "celltrace/core/error.hpp"
#include "celltrace/core/random.hpp"
#include "celltrace/radio/capacity.hpp"
#include "celltrace/radio/throughput.hpp"
#include "celltrace/simd/kernels.hpp"
#include "instances.hpp"

using namespace celltrace;
using simd::Isa;

namespace {

std::vector<Isa> available() {
  std::vector<Isa> out{Isa::Scalar};
  for (Isa i : {Isa::Avx2, Isa::Neon})
    if (simd::isa_supported(i)) out.push_back(i);
  return out;
}

std::vector<double> random_vec(Rng& rng, std::size_t n, double lo, double hi) {
  std::vector<double> v(n);
  for (double& x : v) x = lo + (hi - lo) * rng.uniform();
  return v;
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

struct IsaGuard {
  Isa saved = simd::active_isa();
  ~IsaGuard() { simd::set_active_isa(saved); }
};

}  // namespace

TEST_CASE("scalar table is always present") {
  CHECK(simd::isa_supported(Isa::Scalar));
  CHECK(simd::kernels_for(Isa::Scalar).isa == Isa::Scalar);
  CHECK(simd::isa_supported(simd::detect_isa()));
}

TEST_CASE("unsupported ISAs are rejected") {
  for (Isa i : {Isa::Avx2, Isa::Neon})
    if (!simd::isa_supported(i)) CHECK_THROWS_AS(simd::kernels_for(i), Error);
}

TEST_CASE("elementwise kernels are bit-identical across ISAs") {
  const auto& ref = simd::kernels_for(Isa::Scalar);
  Rng rng(17);
  // Odd lengths exercise the scalar tails of the vector loops.
  for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 64u, 1001u}) {
    const auto xs = random_vec(rng, n, -5000, 5000), ys = random_vec(rng, n, -5000, 5000);
    const auto vals = random_vec(rng, n, -1, 1);
    std::vector<double> mask(n);
    for (double& m : mask) m = rng.uniform() < 0.5 ? 0.0 : 1.0 / 3.0;
    for (Isa isa : available()) {
      CAPTURE(simd::to_string(isa));
      CAPTURE(n);
      const auto& k = simd::kernels_for(isa);
      std::vector<double> d0(n), d1(n);
      ref.distances(xs.data(), ys.data(), n, 12.5, -7.25, d0.data());
      k.distances(xs.data(), ys.data(), n, 12.5, -7.25, d1.data());
      CHECK(same_bits(d0, d1));

      std::vector<double> a0 = vals, a1 = vals;
      ref.masked_accumulate(a0.data(), xs.data(), mask.data(), n);
      k.masked_accumulate(a1.data(), xs.data(), mask.data(), n);
      CHECK(same_bits(a0, a1));

      std::vector<double> b0(n, 0.0), b1(n, 0.0);
      std::vector<std::int32_t> i0(n, -1), i1(n, -1);
      for (std::int32_t idx = 0; idx < 4; ++idx) {
        const auto v = random_vec(rng, n, -1, 1);
        ref.argmax_update(b0.data(), i0.data(), v.data(), idx, n);
        k.argmax_update(b1.data(), i1.data(), v.data(), idx, n);
      }
      CHECK(same_bits(b0, b1));
      CHECK(i0 == i1);
    }
  }
}

TEST_CASE("point-in-polygon counts agree across ISAs") {
  const auto& ref = simd::kernels_for(Isa::Scalar);
  Rng rng(23);
  const std::vector<double> hx{0, 10, 12, 5, -2}, hy{0, 0, 8, 12, 6};
  for (std::size_t n : {1u, 5u, 333u}) {
    auto xs = random_vec(rng, n, -5, 15), ys = random_vec(rng, n, -5, 15);
    // Vertices and edge midpoints sit on the boundary and count as inside.
    xs[0] = 10;
    ys[0] = 0;
    for (Isa isa : available()) {
      std::vector<std::int32_t> c0(n, 0), c1(n, 0);
      ref.count_inside_convex(xs.data(), ys.data(), n, hx.data(), hy.data(), hx.size(), c0.data());
      simd::kernels_for(isa).count_inside_convex(xs.data(), ys.data(), n, hx.data(), hy.data(),
                                                 hx.size(), c1.data());
      CHECK(c0 == c1);
      CHECK(c0[0] == 1);
    }
  }
}

TEST_CASE("reductions agree to rounding") {
  const auto& ref = simd::kernels_for(Isa::Scalar);
  Rng rng(29);
  for (std::size_t n : {0u, 1u, 5u, 4096u, 10007u}) {
    const auto a = random_vec(rng, n, 0, 100), b = random_vec(rng, n, 0, 100);
    for (Isa isa : available()) {
      const auto& k = simd::kernels_for(isa);
      CHECK(k.sum(a.data(), n) == doctest::Approx(ref.sum(a.data(), n)).epsilon(1e-12));
      CHECK(k.sum_squared_diff(a.data(), b.data(), n) ==
            doctest::Approx(ref.sum_squared_diff(a.data(), b.data(), n)).epsilon(1e-12));
    }
  }
}

TEST_CASE("radio scenario is identical under every ISA") {
  IsaGuard guard;
  simd::set_active_isa(Isa::Scalar);
  auto ref = instances::random_healing(3);
  const auto table = ThroughputTable::reference();
  const auto st0 = evaluate_capacity(ref.sc, ref.plan, table, ref.demand_bps);
  for (Isa isa : available()) {
    simd::set_active_isa(isa);
    CHECK(simd::active_isa() == isa);
    auto other = instances::random_healing(3);
    CHECK(other.sc.serving() == ref.sc.serving());
    const auto st = evaluate_capacity(other.sc, other.plan, table, other.demand_bps);
    for (std::size_t l = 0; l < st.location_count(); ++l) {
      // Interference sums are elementwise, so they match bit for bit.
      if (std::isnan(st0.sinr_db[l])) {
        REQUIRE(std::isnan(st.sinr_db[l]));
        continue;
      }
      REQUIRE(st.sinr_db[l] == st0.sinr_db[l]);
      REQUIRE(st.capacity_bps[l] == st0.capacity_bps[l]);
    }
  }
}
