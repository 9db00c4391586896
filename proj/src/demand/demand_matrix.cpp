#include "celltrace/demand/demand_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>
#include <string>

#include "celltrace/core/error.hpp"
#include "celltrace/ingest/csv.hpp"

namespace celltrace {

DemandMatrix::DemandMatrix(std::vector<std::string> bs_ids, std::int64_t slots, DemandKind kind)
    : bs_ids_(std::move(bs_ids)),
      slots_(slots),
      kind_(kind),
      values_(bs_ids_.size() * static_cast<std::size_t>(std::max<std::int64_t>(slots, 0)), 0.0),
      zero_rows_(bs_ids_.size(), false) {
  if (slots < 0) throw Error(ErrorCode::InvalidArgument, "negative slot count");
}

DemandMatrix raw_demand(const TraceTable& trace, std::span<const CellKey> bs_keys, Tech tech) {
  std::vector<std::string> ids;
  ids.reserve(bs_keys.size());
  for (const CellKey& k : bs_keys) ids.push_back(k.op + ":" + k.cell_id);
  DemandMatrix m(std::move(ids), trace.slot_count(), DemandKind::Raw);
  const auto& recs = trace.records();
  for (std::size_t b = 0; b < bs_keys.size(); ++b) {
    const auto it = trace.by_cell().find(bs_keys[b]);
    if (it == trace.by_cell().end()) continue;
    for (std::size_t i : it->second) {
      const TraceRecord& r = recs[i];
      if (r.tech == tech) m.at(b, r.slot) += static_cast<double>(r.bytes_down);
    }
  }
  return m;
}

DemandMatrix normalize_demand(const DemandMatrix& raw) {
  if (raw.kind() != DemandKind::Raw)
    throw Error(ErrorCode::InvalidArgument, "normalize_demand expects a raw matrix");
  DemandMatrix out(raw.bs_ids(), raw.slot_count(), DemandKind::Normalized);
  for (std::size_t b = 0; b < raw.bs_count(); ++b) {
    std::int64_t peak = 0;
    for (std::int64_t k = 0; k < raw.slot_count(); ++k)
      peak = std::max<std::int64_t>(peak, std::llround(raw.at(b, k)));
    if (peak <= 0) {
      out.zero_rows()[b] = true;
      continue;
    }
    for (std::int64_t k = 0; k < raw.slot_count(); ++k) {
      const __int128 num = static_cast<__int128>(100) * std::llround(raw.at(b, k));
      out.at(b, k) = static_cast<double>(static_cast<std::int64_t>(num / peak));
    }
  }
  return out;
}

void write_demand_csv(std::ostream& out, const DemandMatrix& m) {
  out << (m.kind() == DemandKind::Raw ? "bs_id,slot,bytes\n" : "bs_id,slot,delta\n");
  for (std::size_t b = 0; b < m.bs_count(); ++b) {
    const std::string id = csv::escape(m.bs_ids()[b]);
    for (std::int64_t k = 0; k < m.slot_count(); ++k)
      out << id << ',' << k << ',' << std::llround(m.at(b, k)) << '\n';
  }
}

DemandMatrix read_demand_csv(std::istream& in, DemandKind kind) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::SchemaError, "empty demand CSV");
  const auto header = csv::split_line(line);
  if (header.size() != 3 || header[0] != "bs_id" || header[1] != "slot")
    throw Error(ErrorCode::SchemaError, "demand CSV header must be bs_id,slot,<value>");

  std::vector<std::string> ids;
  std::map<std::string, std::size_t> index;
  std::vector<std::tuple<std::size_t, std::int64_t, std::int64_t>> cells;
  std::int64_t slots = 0;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto f = csv::split_line(line);
    const auto slot = f.size() == 3 ? csv::parse_number<std::int64_t>(f[1]) : std::nullopt;
    const auto value = f.size() == 3 ? csv::parse_number<std::int64_t>(f[2]) : std::nullopt;
    if (!slot || !value || *slot < 0 || *value < 0)
      throw Error(ErrorCode::SchemaError, "bad demand row at line " + std::to_string(line_no));
    if (kind != DemandKind::Raw && *value > 100)
      throw Error(ErrorCode::SchemaError,
                  "normalized demand above 100 at line " + std::to_string(line_no));
    auto [it, inserted] = index.emplace(f[0], ids.size());
    if (inserted) ids.push_back(f[0]);
    cells.emplace_back(it->second, *slot, *value);
    slots = std::max(slots, *slot + 1);
  }
  DemandMatrix m(std::move(ids), slots, kind);
  for (const auto& [b, k, v] : cells) m.at(b, k) = static_cast<double>(v);
  if (kind != DemandKind::Raw) {
    for (std::size_t b = 0; b < m.bs_count(); ++b) {
      const auto row = m.row(b);
      m.zero_rows()[b] = std::all_of(row.begin(), row.end(), [](double v) { return v == 0.0; });
    }
  }
  return m;
}

}  // namespace celltrace
