#include "celltrace/radio/throughput.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>

#include "celltrace/core/error.hpp"

namespace celltrace {

ThroughputTable::ThroughputTable(double min_sinr_db,
                                 std::vector<std::pair<double, double>> anchors)
    : min_sinr_db_(min_sinr_db), anchors_(std::move(anchors)) {
  if (anchors_.empty()) throw Error(ErrorCode::SchemaError, "throughput table has no anchors");
  for (std::size_t i = 0; i < anchors_.size(); ++i) {
    if (anchors_[i].second < 0.0)
      throw Error(ErrorCode::SchemaError, "negative throughput anchor");
    if (i > 0 && (anchors_[i].first <= anchors_[i - 1].first ||
                  anchors_[i].second < anchors_[i - 1].second))
      throw Error(ErrorCode::SchemaError, "throughput anchors must be increasing");
  }
}

ThroughputTable ThroughputTable::reference() {
  return ThroughputTable(-10.0, {{-10.0, 12000},  {-6.7, 19000},   {-4.7, 29500},
                                 {-2.3, 47500},   {0.2, 75800},    {2.4, 110500},
                                 {4.3, 148000},   {5.9, 186000},   {8.1, 241000},
                                 {10.3, 364000},  {11.7, 447000},  {14.1, 607000},
                                 {16.3, 787000},  {18.7, 969000},  {21.0, 1160000},
                                 {22.7, 1330000}, {30.0, 1330000}});
}

double ThroughputTable::per_rb(double sinr_db, double mimo_factor) const noexcept {
  if (!(sinr_db > min_sinr_db_)) return 0.0;
  if (sinr_db <= anchors_.front().first) return anchors_.front().second * mimo_factor;
  if (sinr_db >= anchors_.back().first) return anchors_.back().second * mimo_factor;
  const auto hi = std::upper_bound(anchors_.begin(), anchors_.end(), sinr_db,
                                   [](double v, const auto& a) { return v < a.first; });
  const auto lo = hi - 1;
  const double t = (sinr_db - lo->first) / (hi->first - lo->first);
  return (lo->second + t * (hi->second - lo->second)) * mimo_factor;
}

ThroughputTable load_throughput_table(std::istream& in) {
  try {
    nlohmann::json j;
    in >> j;
    if (j.at("format") != "celltrace.throughput_table" || j.at("version") != 1)
      throw Error(ErrorCode::SchemaError, "not a version 1 throughput table");
    std::vector<std::pair<double, double>> anchors;
    for (const auto& a : j.at("anchors"))
      anchors.emplace_back(a.at(0).get<double>(), a.at(1).get<double>());
    return ThroughputTable(j.at("min_sinr_db").get<double>(), std::move(anchors));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SchemaError, std::string("throughput table: ") + e.what());
  }
}

ThroughputTable load_throughput_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::TableMissing, "cannot open throughput table " + path.string());
  return load_throughput_table(in);
}

}  // namespace celltrace
