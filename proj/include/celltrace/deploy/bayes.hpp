#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "celltrace/deploy/deployment.hpp"
#include "celltrace/ingest/area_map.hpp"

namespace celltrace {

/// Counters ctr(b, a, beta) over the Moore neighborhood, and the derived
/// probabilities p(b, a, beta) = ctr(b, a, beta) / sum_x ctr(x, a, beta).
class DeployModel {
 public:
  using Context = std::pair<AreaType, std::int32_t>;  // (a, beta)
  using Row = std::map<std::int32_t, std::uint64_t>;  // b -> count

  void add(AreaType a, std::int32_t beta, std::int32_t b, std::uint64_t n = 1) {
    ctr_[{a, beta}][b] += n;
  }
  const std::map<Context, Row>& counters() const noexcept { return ctr_; }
  std::uint64_t count(AreaType a, std::int32_t beta, std::int32_t b) const noexcept;
  std::uint64_t context_total(AreaType a, std::int32_t beta) const noexcept;
  double probability(std::int32_t b, AreaType a, std::int32_t beta) const noexcept;
  bool empty() const noexcept { return ctr_.empty(); }

  void to_json(std::ostream& out) const;
  static DeployModel from_json(std::istream& in);

  friend bool operator==(const DeployModel&, const DeployModel&) = default;

 private:
  std::map<Context, Row> ctr_;
};

/// Throws Error(GridMismatch) when `areas` and `dep` differ in shape.
DeployModel train_deployment(const Deployment& dep, const AreaMap& areas);

struct DeployGenerationStats {
  std::size_t nearest_beta = 0;  // context unseen, nearest beta of the area used
  std::size_t uniform = 0;       // area unseen, uniform over observed counts
};

/// Sequential generation: each pass decides every tile once, always taking
/// the undecided tile with the most decided neighbors (lowest row-major
/// index on ties) and drawing B(t) from p(., a, beta) where beta uses the
/// decided neighbors only. Later passes start from the previous decisions,
/// revisit tiles in the first pass's order and see full neighborhoods.
/// Throws Error(UnseenContext) if the model has no counters at all.
Deployment generate_deployment(const DeployModel& model, const AreaMap& areas,
                               std::uint64_t seed, int passes = 2,
                               DeployGenerationStats* stats = nullptr);

}  // namespace celltrace
