#include "celltrace/deploy/bayes.hpp"

#include <cstdlib>
#include <json.hpp>
#include <limits>
#include <set>

#include "celltrace/core/error.hpp"
#include "celltrace/core/random.hpp"

namespace celltrace {

std::uint64_t DeployModel::count(AreaType a, std::int32_t beta, std::int32_t b) const noexcept {
  const auto it = ctr_.find({a, beta});
  if (it == ctr_.end()) return 0;
  const auto jt = it->second.find(b);
  return jt == it->second.end() ? 0 : jt->second;
}

std::uint64_t DeployModel::context_total(AreaType a, std::int32_t beta) const noexcept {
  const auto it = ctr_.find({a, beta});
  if (it == ctr_.end()) return 0;
  std::uint64_t t = 0;
  for (const auto& [b, n] : it->second) t += n;
  return t;
}

double DeployModel::probability(std::int32_t b, AreaType a, std::int32_t beta) const noexcept {
  const std::uint64_t total = context_total(a, beta);
  return total == 0 ? 0.0 : static_cast<double>(count(a, beta, b)) / static_cast<double>(total);
}

void DeployModel::to_json(std::ostream& out) const {
  nlohmann::ordered_json j;
  j["format"] = "celltrace.deploy_model";
  j["version"] = 1;
  j["neighborhood"] = "moore8";
  auto contexts = nlohmann::ordered_json::array();
  for (const auto& [ctx, row] : ctr_) {
    nlohmann::ordered_json e;
    e["area"] = std::string(to_string(ctx.first));
    e["beta"] = ctx.second;
    auto counts = nlohmann::ordered_json::array();
    for (const auto& [b, n] : row) counts.push_back({b, n});
    e["counts"] = counts;
    contexts.push_back(std::move(e));
  }
  j["contexts"] = contexts;
  out << j.dump(1) << '\n';
}

DeployModel DeployModel::from_json(std::istream& in) {
  try {
    nlohmann::json j;
    in >> j;
    if (j.at("format") != "celltrace.deploy_model" || j.at("version") != 1 ||
        j.at("neighborhood") != "moore8")
      throw Error(ErrorCode::SchemaError, "not a version 1 deploy model");
    DeployModel m;
    for (const auto& e : j.at("contexts")) {
      const auto a = parse_area_type(e.at("area").get<std::string>());
      if (!a) throw Error(ErrorCode::SchemaError, "unknown area type");
      const auto beta = e.at("beta").get<std::int32_t>();
      for (const auto& c : e.at("counts")) {
        const auto b = c.at(0).get<std::int32_t>();
        if (b < 0 || beta < 0) throw Error(ErrorCode::SchemaError, "negative deploy count");
        m.add(*a, beta, b, c.at(1).get<std::uint64_t>());
      }
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SchemaError, std::string("deploy model: ") + e.what());
  }
}

DeployModel train_deployment(const Deployment& dep, const AreaMap& areas) {
  if (dep.rows() != areas.rows() || dep.cols() != areas.cols())
    throw Error(ErrorCode::GridMismatch, "deployment and area map differ in shape");
  DeployModel m;
  std::vector<std::size_t> nb;
  for (std::size_t i = 0; i < dep.size(); ++i) {
    dep.neighbors(i, nb);
    std::int64_t sum = 0;
    for (std::size_t v : nb) sum += dep[v];
    m.add(areas.at(dep.tile_at(i)), beta_of(sum, static_cast<std::int64_t>(nb.size())), dep[i]);
  }
  return m;
}

namespace {

class Sampler {
 public:
  Sampler(const DeployModel& m, DeployGenerationStats& st) : model_(m), stats_(st) {
    for (const auto& [ctx, row] : m.counters())
      for (const auto& [b, n] : row) observed_.insert(b);
  }

  std::int32_t draw(AreaType a, std::int32_t beta, Rng& rng) {
    const auto& ctr = model_.counters();
    auto it = ctr.find({a, beta});
    if (it == ctr.end()) {
      // Nearest beta of the same area; the smaller one wins a tie.
      auto best = ctr.end();
      std::int64_t best_gap = std::numeric_limits<std::int64_t>::max();
      for (auto jt = ctr.lower_bound({a, 0}); jt != ctr.end() && jt->first.first == a; ++jt) {
        const std::int64_t gap = std::llabs(static_cast<std::int64_t>(jt->first.second) - beta);
        if (gap < best_gap) {
          best_gap = gap;
          best = jt;
        }
      }
      if (best == ctr.end()) {
        ++stats_.uniform;
        auto pick = observed_.begin();
        std::advance(pick, static_cast<std::ptrdiff_t>(rng.below(observed_.size())));
        return *pick;
      }
      ++stats_.nearest_beta;
      it = best;
    }
    std::uint64_t total = 0;
    for (const auto& [b, n] : it->second) total += n;
    std::uint64_t r = rng.below(total);
    for (const auto& [b, n] : it->second) {
      if (r < n) return b;
      r -= n;
    }
    return it->second.rbegin()->first;
  }

 private:
  const DeployModel& model_;
  DeployGenerationStats& stats_;
  std::set<std::int32_t> observed_;
};

}  // namespace

Deployment generate_deployment(const DeployModel& model, const AreaMap& areas,
                               std::uint64_t seed, int passes, DeployGenerationStats* stats) {
  if (model.empty()) throw Error(ErrorCode::UnseenContext, "deploy model has no counters");
  if (passes < 1) throw Error(ErrorCode::InvalidArgument, "at least one pass is required");
  DeployGenerationStats local;
  Sampler sampler(model, stats ? *stats : local);
  Rng rng(seed);

  Deployment d(areas.rows(), areas.cols(), Provenance::Synthetic);
  const std::size_t n = d.size();
  std::vector<std::vector<std::size_t>> nbrs(n);
  for (std::size_t i = 0; i < n; ++i) d.neighbors(i, nbrs[i]);

  // Pass 1: bucket queue keyed by decided-neighbor count.
  std::vector<bool> decided(n, false);
  std::vector<int> decided_nb(n, 0);
  std::vector<std::set<std::size_t>> bucket(9);
  for (std::size_t i = 0; i < n; ++i) bucket[0].insert(i);
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    int c = 8;
    while (bucket[static_cast<std::size_t>(c)].empty()) --c;
    const std::size_t t = *bucket[static_cast<std::size_t>(c)].begin();
    bucket[static_cast<std::size_t>(c)].erase(bucket[static_cast<std::size_t>(c)].begin());
    std::int64_t sum = 0, cnt = 0;
    for (std::size_t v : nbrs[t]) {
      if (decided[v]) {
        sum += d[v];
        ++cnt;
      }
    }
    d[t] = sampler.draw(areas.at(d.tile_at(t)), beta_of(sum, cnt), rng);
    decided[t] = true;
    order.push_back(t);
    for (std::size_t v : nbrs[t]) {
      if (decided[v]) continue;
      const auto k = static_cast<std::size_t>(decided_nb[v]);
      bucket[k].erase(v);
      bucket[k + 1].insert(v);
      ++decided_nb[v];
    }
  }

  for (int pass = 1; pass < passes; ++pass) {
    for (std::size_t t : order) {
      std::int64_t sum = 0;
      for (std::size_t v : nbrs[t]) sum += d[v];
      d[t] = sampler.draw(areas.at(d.tile_at(t)),
                          beta_of(sum, static_cast<std::int64_t>(nbrs[t].size())), rng);
    }
  }
  return d;
}

}  // namespace celltrace
