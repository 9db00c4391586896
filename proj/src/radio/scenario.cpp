#include "celltrace/radio/scenario.hpp"

#include <cmath>
#include <limits>

#include "celltrace/core/error.hpp"
#include "celltrace/core/polygon.hpp"
#include "celltrace/core/random.hpp"
#include "celltrace/reconstruct/placement.hpp"
#include "celltrace/simd/kernels.hpp"

namespace celltrace {

double band_overlap(const ReuseAssignment& interferer, const ReuseAssignment& victim) noexcept {
  if (victim.k == 1) return interferer.k == 1 ? 1.0 : 1.0 / interferer.k;
  if (interferer.k == 1) return 1.0;
  return interferer.sub_band == victim.sub_band ? 1.0 : 0.0;
}

double antenna_gain_db(const BaseStation& bs, Point p, double side_lobe_db) noexcept {
  if (bs.antenna.kind == Antenna::Kind::Omni || p == bs.position) return 0.0;
  double diff = std::fmod(std::abs(bearing_deg(bs.position, p) - bs.antenna.azimuth_deg), 360.0);
  if (diff > 180.0) diff = 360.0 - diff;
  return diff <= bs.antenna.beamwidth_deg / 2.0 ? 0.0 : side_lobe_db;
}

RadioScenario::RadioScenario(std::vector<BaseStation> stations, const SpectrumPlan& spectrum,
                             std::vector<Location> locations, const RadioConfig& config)
    : stations_(std::move(stations)), locations_(std::move(locations)), config_(config) {
  for (const BaseStation& bs : stations_)
    if (bs.op != stations_.front().op)
      throw Error(ErrorCode::InvalidArgument, "a radio scenario covers one operator");
  const std::size_t B = stations_.size(), N = L();
  rx_dbm_.resize(B * N);
  rx_mw_.resize(B * N);
  cover_.assign(B * N, 0);
  los_.assign(B * N, 0);
  coverage_count_.assign(B, 0);
  serving_.assign(N, -1);

  std::vector<double> xs(N), ys(N), dist(N);
  for (std::size_t l = 0; l < N; ++l) {
    xs[l] = locations_[l].position.x;
    ys[l] = locations_[l].position.y;
  }
  std::vector<double> best(N, -std::numeric_limits<double>::infinity());
  std::vector<double> masked(N);
  const auto& k = simd::kernels();

  for (std::size_t b = 0; b < B; ++b) {
    const BaseStation& bs = stations_[b];
    bands_.push_back(spectrum.band_for(bs.op, tier_of(bs.cls)));
    noise_mw_.push_back(
        db_to_linear(thermal_noise_dbm(bands_[b].bandwidth_mhz * 1e6, config_.noise_figure_db)));
    const double f = bands_[b].center_ghz;
    const double radius = bs.cls == BsClass::Macro ? config_.macro_radius_m : config_.micro_radius_m;
    const std::uint64_t bs_key = fnv1a64(bs.id);
    k.distances(xs.data(), ys.data(), N, bs.position.x, bs.position.y, dist.data());
    for (std::size_t l = 0; l < N; ++l) {
      const double d = std::max(dist[l], config_.min_distance_m);
      PathLossVariant v = PathLossVariant::MacroNLOS;
      if (bs.cls == BsClass::Micro) {
        const bool is_los = keyed_uniform(config_.los_seed, bs_key, locations_[l].key) < p_los(d);
        los_[b * N + l] = is_los;
        v = is_los ? PathLossVariant::MicroLOS : PathLossVariant::MicroNLOS;
      }
      const double rx = bs.tx_power_dbm - path_loss_db(d, f, v, bs.height_m, config_.ue_height_m) +
                        antenna_gain_db(bs, locations_[l].position, config_.sector_side_lobe_db);
      rx_dbm_[b * N + l] = rx;
      rx_mw_[b * N + l] = db_to_linear(rx);
      const bool c = bs.coverage.size() >= 3 ? convex_contains(bs.coverage, locations_[l].position)
                                             : dist[l] <= radius;
      cover_[b * N + l] = c;
      coverage_count_[b] += c;
      masked[l] = c ? rx : -std::numeric_limits<double>::infinity();
    }
    k.argmax_update(best.data(), serving_.data(), masked.data(), static_cast<std::int32_t>(b), N);
  }
}

double LinkConditions::sinr_db(std::size_t l) const noexcept {
  if (noise_mw[l] == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return linear_to_db(signal_mw[l] / (noise_mw[l] + interference_mw[l]));
}

double LinkConditions::snr_db(std::size_t l) const noexcept {
  if (noise_mw[l] == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return linear_to_db(signal_mw[l] / noise_mw[l]);
}

LinkConditions link_conditions(const RadioScenario& sc, const ReusePlan& plan,
                               const InterferenceOptions& opts) {
  const std::size_t B = sc.bs_count(), N = sc.location_count();
  if (plan.size() != B) throw Error(ErrorCode::IndexMismatch, "reuse plan size differs from BSs");
  auto muted = [&](std::size_t b) { return !opts.muted.empty() && opts.muted[b] != 0; };
  auto aider = [&](std::size_t l) { return opts.aider.empty() ? -1 : opts.aider[l]; };

  LinkConditions lc;
  lc.signal_mw.assign(N, 0.0);
  lc.interference_mw.assign(N, 0.0);
  lc.noise_mw.assign(N, 0.0);
  const auto& serving = sc.serving();
  for (std::size_t l = 0; l < N; ++l) {
    const std::int32_t s = serving[l];
    if (s < 0) continue;
    const auto su = static_cast<std::size_t>(s);
    lc.noise_mw[l] = sc.noise_mw(su);
    if (!muted(su)) lc.signal_mw[l] = sc.rx_mw(su, l);
    const std::int32_t a = aider(l);
    if (a >= 0 && !muted(static_cast<std::size_t>(a)))
      lc.signal_mw[l] +=
          band_overlap(plan[static_cast<std::size_t>(a)], plan[su]) * sc.rx_mw(static_cast<std::size_t>(a), l);
  }

  std::vector<double> mask(N);
  const auto& k = simd::kernels();
  for (std::size_t j = 0; j < B; ++j) {
    if (muted(j)) continue;
    bool any = false;
    for (std::size_t l = 0; l < N; ++l) {
      const std::int32_t s = serving[l];
      double w = 0.0;
      if (s >= 0 && static_cast<std::size_t>(s) != j && aider(l) != static_cast<std::int32_t>(j) &&
          sc.tier(j) == sc.tier(static_cast<std::size_t>(s)))
        w = band_overlap(plan[j], plan[static_cast<std::size_t>(s)]);
      mask[l] = w;
      any = any || w != 0.0;
    }
    if (any) k.masked_accumulate(lc.interference_mw.data(), sc.rx_mw_row(j).data(), mask.data(), N);
  }
  return lc;
}

SinrField compute_sinr(const RadioScenario& sc, const ReusePlan& plan) {
  const LinkConditions lc = link_conditions(sc, plan);
  SinrField f;
  f.serving = sc.serving();
  f.sinr_db.resize(sc.location_count());
  f.snr_db.resize(sc.location_count());
  for (std::size_t l = 0; l < sc.location_count(); ++l) {
    f.sinr_db[l] = lc.sinr_db(l);
    f.snr_db[l] = lc.snr_db(l);
    if (f.serving[l] < 0) ++f.uncovered;
  }
  return f;
}

}  // namespace celltrace
