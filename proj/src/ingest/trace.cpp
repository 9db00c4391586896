#include "celltrace/ingest/trace.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <optional>

#include "celltrace/core/error.hpp"
#include "celltrace/ingest/csv.hpp"

namespace celltrace {

std::string_view to_string(RejectReason r) noexcept {
  switch (r) {
    case RejectReason::MalformedRow: return "MalformedRow";
    case RejectReason::NegativeBytes: return "NegativeBytes";
    case RejectReason::OutOfExtent: return "OutOfExtent";
    case RejectReason::UnknownTech: return "UnknownTech";
  }
  return "MalformedRow";
}

std::size_t RejectionReport::rejected() const noexcept {
  std::size_t n = 0;
  for (std::size_t c : counts) n += c;
  return n;
}

TraceTable::TraceTable(std::vector<TraceRecord> records, int utc_offset_hours)
    : records_(std::move(records)), utc_offset_(utc_offset_hours) {
  if (!records_.empty()) {
    auto [lo, hi] = std::minmax_element(
        records_.begin(), records_.end(),
        [](const TraceRecord& a, const TraceRecord& b) { return a.ts_hour < b.ts_hour; });
    first_ts_ = lo->ts_hour;
    slot_count_ = hi->ts_hour - lo->ts_hour + 1;
  }
  for (auto& r : records_) r.slot = r.ts_hour - first_ts_;
  calendar_ = SlotCalendar::from_unix_hour(first_ts_, utc_offset_);
  build_indices();
}

TraceTable::TraceTable(std::vector<TraceRecord> records, int utc_offset_hours,
                       std::int64_t first_ts, std::int64_t slot_count)
    : records_(std::move(records)),
      first_ts_(first_ts),
      slot_count_(slot_count),
      utc_offset_(utc_offset_hours),
      calendar_(SlotCalendar::from_unix_hour(first_ts, utc_offset_hours)) {
  build_indices();
}

void TraceTable::build_indices() {
  by_slot_.assign(static_cast<std::size_t>(slot_count_), {});
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const TraceRecord& r = records_[i];
    if (!r.cell_id.empty()) by_cell_[CellKey{r.op, r.cell_id}].push_back(i);
    if (!r.user_id.empty()) {
      by_user_[r.user_id].push_back(i);
      has_users_ = true;
    }
    by_slot_[static_cast<std::size_t>(r.slot)].push_back(i);
  }
}

namespace {

constexpr std::size_t kMaxSamples = 64;

void reject(RejectionReport& report, std::size_t line, RejectReason reason) {
  ++report.counts[static_cast<std::size_t>(reason)];
  if (report.samples.size() < kMaxSamples) report.samples.emplace_back(line, reason);
}

}  // namespace

ParsedTrace parse_trace(std::istream& in, const Grid& grid, int utc_offset_hours) {
  std::string line;
  if (!std::getline(in, line))
    throw Error(ErrorCode::SchemaError, "trace file is empty (header required)");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (!line.empty() && static_cast<unsigned char>(line[0]) == 0xEF && line.size() >= 3)
    line.erase(0, 3);  // UTF-8 BOM
  if (line != kTraceHeader)
    throw Error(ErrorCode::SchemaError,
                "unexpected trace header '" + line + "', expected '" + kTraceHeader + "'");

  RejectionReport report;
  std::vector<TraceRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    ++report.input_rows;
    const auto f = csv::split_line(line);
    if (f.size() != 10) {
      reject(report, line_no, RejectReason::MalformedRow);
      continue;
    }
    const auto ts = csv::parse_number<std::int64_t>(f[0]);
    const auto lat = csv::parse_number<double>(f[2]);
    const auto lon = csv::parse_number<double>(f[3]);
    const auto down = csv::parse_number<std::int64_t>(f[7]);
    const auto up = csv::parse_number<std::int64_t>(f[8]);
    if (!ts || !lat || !lon || !down || !up || f[4].empty()) {
      reject(report, line_no, RejectReason::MalformedRow);
      continue;
    }
    if (*down < 0 || *up < 0) {
      reject(report, line_no, RejectReason::NegativeBytes);
      continue;
    }
    TraceRecord r;
    if (f[6] == "LTE" || f[6] == "4G" || f[6] == "lte") {
      r.tech = Tech::LTE;
    } else if (f[6] == "3G" || f[6] == "3g") {
      r.tech = Tech::G3;
    } else {
      reject(report, line_no, RejectReason::UnknownTech);
      continue;
    }
    r.latlon = {*lat, *lon};
    r.position = grid.project(r.latlon);
    if (!grid.contains(r.position)) {
      reject(report, line_no, RejectReason::OutOfExtent);
      continue;
    }
    r.ts_hour = *ts;
    r.user_id = f[1];
    r.op = f[4];
    r.cell_id = f[5];
    r.bytes_down = *down;
    r.bytes_up = *up;
    r.app = f[9];
    records.push_back(std::move(r));
  }
  return {TraceTable(std::move(records), utc_offset_hours), std::move(report)};
}

ParsedTrace parse_trace(const std::filesystem::path& path, const Grid& grid,
                        int utc_offset_hours) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::FileError, "cannot open trace file " + path.string());
  return parse_trace(in, grid, utc_offset_hours);
}

}  // namespace celltrace
