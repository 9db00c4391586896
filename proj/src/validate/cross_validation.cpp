#include "celltrace/validate/cross_validation.hpp"

#include <cmath>
#include <set>

#include "celltrace/core/error.hpp"
#include "celltrace/core/random.hpp"
#include "celltrace/deploy/bayes.hpp"
#include "celltrace/validate/metrics.hpp"

namespace celltrace {

FoldAssignment::FoldAssignment(int k, std::uint64_t seed) : k_(k), seed_(seed) {
  if (k < 2) throw Error(ErrorCode::InvalidK, "k-fold validation needs k >= 2");
}

int FoldAssignment::fold_of(std::string_view user_id) const noexcept {
  return static_cast<int>(derive_seed(seed_, user_id) % static_cast<std::uint64_t>(k_));
}

DemandMatrix combine_mean(std::span<const DemandMatrix> runs) {
  if (runs.empty()) throw Error(ErrorCode::InvalidArgument, "nothing to combine");
  DemandMatrix out(runs[0].bs_ids(), runs[0].slot_count(), runs[0].kind());
  for (const DemandMatrix& r : runs)
    if (r.bs_ids() != out.bs_ids() || r.slot_count() != out.slot_count())
      throw Error(ErrorCode::IndexMismatch, "combined runs differ in shape");
  const double n = static_cast<double>(runs.size());
  for (std::size_t b = 0; b < out.bs_count(); ++b)
    for (std::int64_t k = 0; k < out.slot_count(); ++k) {
      double s = 0.0;
      for (const DemandMatrix& r : runs) s += r.at(b, k);
      out.at(b, k) = std::round(s / n);
    }
  return out;
}

Deployment combine_mean(std::span<const Deployment> runs) {
  if (runs.empty()) throw Error(ErrorCode::InvalidArgument, "nothing to combine");
  Deployment out(runs[0].rows(), runs[0].cols(), runs[0].provenance());
  for (const Deployment& r : runs)
    if (r.rows() != out.rows() || r.cols() != out.cols())
      throw Error(ErrorCode::GridMismatch, "combined deployments differ in shape");
  const double n = static_cast<double>(runs.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::int64_t s = 0;
    for (const Deployment& r : runs) s += r[i];
    out[i] = static_cast<std::int32_t>(std::llround(static_cast<double>(s) / n));
  }
  return out;
}

FidelityReport cross_validate(const TraceTable& trace, const Grid& grid, const AreaMap& areas,
                              const CrossValidationOptions& opts) {
  if (!trace.has_users()) throw Error(ErrorCode::UsersAbsent, "trace has no user ids");
  const FoldAssignment folds(opts.k, opts.seed);

  FidelityReport rep;
  rep.k = opts.k;
  rep.seed = opts.seed;
  rep.fold_users.assign(static_cast<std::size_t>(opts.k), 0);
  for (const auto& [user, idx] : trace.by_user())
    ++rep.fold_users[static_cast<std::size_t>(folds.fold_of(user))];

  const auto cells = build_cells(trace, opts.cells);
  const auto stations = place_bs(cells, grid, opts.placement);
  std::vector<CellKey> keys;
  std::vector<AreaType> bs_area;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    keys.push_back(cells[i].key);
    bs_area.push_back(areas.at(stations[i].tile));
  }
  auto demand_of = [&](const TraceTable& t) {
    DemandMatrix raw = raw_demand(t, keys, Tech::LTE);
    if (!opts.cells.lte_only) {
      const DemandMatrix g3 = raw_demand(t, keys, Tech::G3);
      for (std::size_t b = 0; b < raw.bs_count(); ++b)
        for (std::int64_t k = 0; k < raw.slot_count(); ++k) raw.at(b, k) += g3.at(b, k);
    }
    return normalize_demand(raw);
  };
  const DemandMatrix real = demand_of(trace);

  std::vector<DemandMatrix> synth_runs;
  std::map<BsClass, std::vector<Deployment>> deploy_runs;
  for (int f = 0; f < opts.k; ++f) {
    const TraceTable train = trace.filter(
        [&](const TraceRecord& r) { return folds.fold_of(r.user_id) != f; });
    const std::uint64_t fold_seed = derive_seed(opts.seed, "fold:" + std::to_string(f));

    const DemandMatrix delta = demand_of(train);
    const TransitionModel model = train_demand(delta, bs_area, trace.calendar(), opts.markov);
    synth_runs.push_back(generate_demand(model, real.bs_ids(), bs_area, trace.slot_count(),
                                         trace.calendar(), derive_seed(fold_seed, "demand")));

    if (opts.deployment) {
      const auto train_cells = build_cells(train, opts.cells);
      const auto train_bs = place_bs(train_cells, grid, opts.placement);
      for (BsClass cls : {BsClass::Macro, BsClass::Micro}) {
        const DeployModel dm = train_deployment(deployment_from(train_bs, grid, cls), areas);
        deploy_runs[cls].push_back(generate_deployment(
            dm, areas, derive_seed(fold_seed, "deploy:" + std::string(to_string(cls))),
            opts.deploy_passes));
      }
    }
  }

  const DemandMatrix synth = combine_mean(synth_runs);
  const SlotCalendar& cal = trace.calendar();
  rep.rmse_hour = rmse(real, synth, Granularity::Hour, cal);
  rep.rmse_b = rmse(real, synth, Granularity::PerBS, cal);
  rep.rmse_bk = rmse(real, synth, Granularity::PerBSSlot, cal);
  rep.profile_real = hourly_profile(real, cal);
  rep.profile_synth = hourly_profile(synth, cal);
  rep.bs_ids = real.bs_ids();
  rep.totals_real = per_bs_totals(real);
  rep.totals_synth = per_bs_totals(synth);
  for (auto& [cls, runs] : deploy_runs)
    rep.deployment[cls] =
        deployment_stats(deployment_from(stations, grid, cls), combine_mean(runs));
  return rep;
}

}  // namespace celltrace
