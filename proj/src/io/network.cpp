#include "celltrace/io/network.hpp"

#include <fstream>
#include <json.hpp>

#include "celltrace/core/error.hpp"
#include "celltrace/ingest/csv.hpp"
#include "celltrace/io/format.hpp"

namespace celltrace {

namespace {

using ojson = nlohmann::ordered_json;

BsClass parse_class(const std::string& s) {
  if (s == "macro") return BsClass::Macro;
  if (s == "micro") return BsClass::Micro;
  throw Error(ErrorCode::SchemaError, "unknown BS class '" + s + "'");
}

}  // namespace

void write_network_json(std::ostream& out, const Network& net) {
  if (net.keys.size() != net.stations.size())
    throw Error(ErrorCode::IndexMismatch, "network keys and stations differ in length");
  ojson doc;
  doc["format"] = "celltrace.network";
  doc["version"] = 1;
  auto list = ojson::array();
  for (std::size_t i = 0; i < net.stations.size(); ++i) {
    const BaseStation& bs = net.stations[i];
    ojson s;
    s["id"] = bs.id;
    s["operator"] = bs.op;
    s["cell_id"] = net.keys[i].cell_id;
    s["site_id"] = bs.site_id;
    s["class"] = to_string(bs.cls);
    s["x_m"] = bs.position.x;
    s["y_m"] = bs.position.y;
    s["antenna"] = {{"kind", bs.antenna.kind == Antenna::Kind::Omni ? "omni" : "sector"},
                    {"azimuth_deg", bs.antenna.azimuth_deg},
                    {"beamwidth_deg", bs.antenna.beamwidth_deg}};
    s["tx_power_dbm"] = bs.tx_power_dbm;
    s["height_m"] = bs.height_m;
    s["degenerate"] = bs.degenerate;
    auto cov = ojson::array();
    for (const Point& p : bs.coverage) cov.push_back({p.x, p.y});
    s["coverage"] = std::move(cov);
    list.push_back(std::move(s));
  }
  doc["stations"] = std::move(list);
  out << doc.dump(1) << '\n';
}

Network read_network_json(std::istream& in, const Grid& grid) {
  Network net;
  try {
    const auto doc = nlohmann::json::parse(in);
    if (doc.at("format") != "celltrace.network" || doc.at("version") != 1)
      throw Error(ErrorCode::SchemaError, "not a celltrace.network v1 document");
    for (const auto& s : doc.at("stations")) {
      const Point pos{s.at("x_m").get<double>(), s.at("y_m").get<double>()};
      BaseStation bs;
      bs.id = s.at("id").get<std::string>();
      bs.op = s.at("operator").get<std::string>();
      bs.site_id = s.at("site_id").get<std::string>();
      bs.cls = parse_class(s.at("class").get<std::string>());
      bs.position = pos;
      bs.latlon = grid.unproject(pos);
      bs.tile = grid.to_tile(pos);
      const auto& a = s.at("antenna");
      bs.antenna.kind = a.at("kind") == "omni" ? Antenna::Kind::Omni : Antenna::Kind::Sector;
      bs.antenna.azimuth_deg = a.at("azimuth_deg").get<double>();
      bs.antenna.beamwidth_deg = a.at("beamwidth_deg").get<double>();
      bs.tx_power_dbm = s.at("tx_power_dbm").get<double>();
      bs.height_m = s.at("height_m").get<double>();
      bs.degenerate = s.at("degenerate").get<bool>();
      for (const auto& p : s.at("coverage"))
        bs.coverage.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
      net.keys.push_back({bs.op, s.at("cell_id").get<std::string>()});
      net.stations.push_back(std::move(bs));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SchemaError, std::string("network: ") + e.what());
  }
  return net;
}

Network read_network_json(const std::filesystem::path& path, const Grid& grid) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::FileError, "cannot open " + path.string());
  return read_network_json(in, grid);
}

void write_cells_csv(std::ostream& out, std::span<const CellRecord> cells) {
  out << "id,operator,class,area_m2,perimeter_m,roundness,range_m,samples,degenerate\n";
  for (const CellRecord& c : cells) {
    out << csv::escape(c.key.op + ":" + c.key.cell_id) << ',' << csv::escape(c.key.op) << ','
        << to_string(c.cls) << ',' << fmt(c.area_m2) << ',' << fmt(c.perimeter_m) << ','
        << (c.roundness ? fmt(*c.roundness) : "") << ',' << fmt(c.range_m) << ','
        << c.sample_count() << ',' << (c.degenerate ? 1 : 0) << '\n';
  }
}

void write_bs_csv(std::ostream& out, std::span<const BaseStation> stations) {
  out << "id,operator,site_id,class,antenna,azimuth_deg,beamwidth_deg,lat,lon,x_m,y_m,"
         "tile_row,tile_col,tx_power_dbm,height_m,degenerate\n";
  for (const BaseStation& bs : stations) {
    const bool omni = bs.antenna.kind == Antenna::Kind::Omni;
    out << csv::escape(bs.id) << ',' << csv::escape(bs.op) << ',' << csv::escape(bs.site_id)
        << ',' << to_string(bs.cls) << ',' << (omni ? "omni" : "sector") << ','
        << (omni ? "" : fmt(bs.antenna.azimuth_deg)) << ','
        << (omni ? "" : fmt(bs.antenna.beamwidth_deg)) << ',' << fmt(bs.latlon.lat) << ','
        << fmt(bs.latlon.lon) << ',' << fmt(bs.position.x) << ',' << fmt(bs.position.y) << ','
        << bs.tile.row << ',' << bs.tile.col << ',' << fmt(bs.tx_power_dbm) << ','
        << fmt(bs.height_m) << ',' << (bs.degenerate ? 1 : 0) << '\n';
  }
}

void write_trace_csv(std::ostream& out, const TraceTable& trace) {
  out << kTraceHeader << '\n';
  for (const TraceRecord& r : trace.records()) {
    out << r.ts_hour << ',' << csv::escape(r.user_id) << ',' << fmt(r.latlon.lat) << ','
        << fmt(r.latlon.lon) << ',' << csv::escape(r.op) << ',' << csv::escape(r.cell_id) << ','
        << (r.tech == Tech::LTE ? "LTE" : "3G") << ',' << r.bytes_down << ',' << r.bytes_up
        << ',' << csv::escape(r.app) << '\n';
  }
}

}  // namespace celltrace
