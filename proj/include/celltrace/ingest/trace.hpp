#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "celltrace/core/calendar.hpp"
#include "celltrace/core/geo.hpp"
#include "celltrace/core/grid.hpp"

namespace celltrace {

enum class Tech : std::uint8_t { LTE, G3 };

struct TraceRecord {
  std::int64_t ts_hour = 0;  // hours since the Unix epoch, UTC
  std::int64_t slot = 0;     // ts_hour - first ts_hour of the trace
  std::string user_id;       // empty when absent
  LatLon latlon;
  Point position;            // projected into the grid
  std::string op;
  std::string cell_id;       // empty when absent
  Tech tech = Tech::LTE;
  std::int64_t bytes_down = 0;
  std::int64_t bytes_up = 0;
  std::string app;
};

/// (operator, cell id) identifies a cell across operators.
struct CellKey {
  std::string op;
  std::string cell_id;

  friend auto operator<=>(const CellKey&, const CellKey&) = default;
  friend bool operator==(const CellKey&, const CellKey&) = default;
};

enum class RejectReason : std::uint8_t {
  MalformedRow,
  NegativeBytes,
  OutOfExtent,
  UnknownTech,
};
inline constexpr std::size_t kRejectReasonCount = 4;
std::string_view to_string(RejectReason r) noexcept;

struct RejectionReport {
  std::size_t input_rows = 0;
  std::array<std::size_t, kRejectReasonCount> counts{};
  /// Line numbers (1-based, header is line 1) of the first rejected rows.
  std::vector<std::pair<std::size_t, RejectReason>> samples;

  std::size_t rejected() const noexcept;
  std::size_t count(RejectReason r) const noexcept {
    return counts[static_cast<std::size_t>(r)];
  }
};

/// Immutable, indexed collection of trace records.
class TraceTable {
 public:
  TraceTable() = default;
  TraceTable(std::vector<TraceRecord> records, int utc_offset_hours);

  const std::vector<TraceRecord>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }

  std::int64_t first_ts_hour() const noexcept { return first_ts_; }
  std::int64_t slot_count() const noexcept { return slot_count_; }
  const SlotCalendar& calendar() const noexcept { return calendar_; }
  int utc_offset_hours() const noexcept { return utc_offset_; }
  bool has_users() const noexcept { return has_users_; }

  const std::map<CellKey, std::vector<std::size_t>>& by_cell() const noexcept {
    return by_cell_;
  }
  const std::map<std::string, std::vector<std::size_t>>& by_user() const noexcept {
    return by_user_;
  }
  /// Record indices per slot, slot_count() entries.
  const std::vector<std::vector<std::size_t>>& by_slot() const noexcept { return by_slot_; }

  /// Subset of records whose user passes `keep`; slot numbering and calendar
  /// stay anchored to this table.
  template <class Pred>
  TraceTable filter(Pred keep) const {
    std::vector<TraceRecord> out;
    for (const auto& r : records_)
      if (keep(r)) out.push_back(r);
    return TraceTable(std::move(out), utc_offset_, first_ts_, slot_count_);
  }

 private:
  TraceTable(std::vector<TraceRecord> records, int utc_offset_hours,
             std::int64_t first_ts, std::int64_t slot_count);
  void build_indices();

  std::vector<TraceRecord> records_;
  std::int64_t first_ts_ = 0;
  std::int64_t slot_count_ = 0;
  int utc_offset_ = 0;
  SlotCalendar calendar_;
  bool has_users_ = false;
  std::map<CellKey, std::vector<std::size_t>> by_cell_;
  std::map<std::string, std::vector<std::size_t>> by_user_;
  std::vector<std::vector<std::size_t>> by_slot_;
};

struct ParsedTrace {
  TraceTable table;
  RejectionReport report;
};

inline constexpr const char* kTraceHeader =
    "ts_hour,user_id,lat,lon,operator,cell_id,tech,bytes_down,bytes_up,app";

/// Throws Error(FileError) if unreadable, Error(SchemaError) on a wrong header.
ParsedTrace parse_trace(const std::filesystem::path& path, const Grid& grid,
                        int utc_offset_hours = 0);
ParsedTrace parse_trace(std::istream& in, const Grid& grid, int utc_offset_hours = 0);

}  // namespace celltrace
