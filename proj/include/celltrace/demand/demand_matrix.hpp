#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "celltrace/core/types.hpp"
#include "celltrace/ingest/trace.hpp"

namespace celltrace {

enum class DemandKind : std::uint8_t { Raw, Normalized, Synthetic };

/// Demand per (BS, slot), row-major by BS. Raw values are downlink bytes;
/// normalized and synthetic values are integers in [0, 100].
class DemandMatrix {
 public:
  DemandMatrix() = default;
  DemandMatrix(std::vector<std::string> bs_ids, std::int64_t slots, DemandKind kind);

  const std::vector<std::string>& bs_ids() const noexcept { return bs_ids_; }
  std::size_t bs_count() const noexcept { return bs_ids_.size(); }
  std::int64_t slot_count() const noexcept { return slots_; }
  DemandKind kind() const noexcept { return kind_; }
  void set_kind(DemandKind k) noexcept { kind_ = k; }

  double& at(std::size_t bs, std::int64_t slot) noexcept {
    return values_[bs * static_cast<std::size_t>(slots_) + static_cast<std::size_t>(slot)];
  }
  double at(std::size_t bs, std::int64_t slot) const noexcept {
    return values_[bs * static_cast<std::size_t>(slots_) + static_cast<std::size_t>(slot)];
  }
  std::span<const double> row(std::size_t bs) const noexcept {
    return {values_.data() + bs * static_cast<std::size_t>(slots_),
            static_cast<std::size_t>(slots_)};
  }
  const std::vector<double>& values() const noexcept { return values_; }

  /// BS rows with no demand at all; normalization leaves them at zero.
  const std::vector<bool>& zero_rows() const noexcept { return zero_rows_; }
  std::vector<bool>& zero_rows() noexcept { return zero_rows_; }

 private:
  std::vector<std::string> bs_ids_;
  std::int64_t slots_ = 0;
  DemandKind kind_ = DemandKind::Raw;
  std::vector<double> values_;
  std::vector<bool> zero_rows_;
};

/// Raw downlink bytes per (cell, slot) for the given cells of `trace`.
/// `bs_keys[i]` names the cell that becomes row i.
DemandMatrix raw_demand(const TraceTable& trace, std::span<const CellKey> bs_keys,
                        Tech tech = Tech::LTE);

/// delta(b,k) = floor(100 * rho(b,k) / max_h rho(b,h)); all-zero rows stay
/// zero and are flagged.
DemandMatrix normalize_demand(const DemandMatrix& raw);

/// CSV `bs_id,slot,delta` (or `bs_id,slot,bytes` for raw matrices).
void write_demand_csv(std::ostream& out, const DemandMatrix& m);
DemandMatrix read_demand_csv(std::istream& in, DemandKind kind);

}  // namespace celltrace
