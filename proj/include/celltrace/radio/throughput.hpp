#pragma once

#include <filesystem>
#include <istream>
#include <utility>
#include <vector>

namespace celltrace {

/// Piecewise-linear SINR -> per-RB throughput map. Zero at or below the
/// minimum SINR, flat beyond the last anchor.
class ThroughputTable {
 public:
  /// Anchors (SINR dB, bit/s per RB), strictly increasing in SINR and
  /// nondecreasing in throughput; throws Error(SchemaError) otherwise.
  ThroughputTable(double min_sinr_db, std::vector<std::pair<double, double>> anchors);

  /// 2x2 MIMO reference anchors, identical to data/throughput_2x2.json.
  static ThroughputTable reference();

  double min_sinr_db() const noexcept { return min_sinr_db_; }
  const std::vector<std::pair<double, double>>& anchors() const noexcept { return anchors_; }

  /// bit/s carried by one RB at `sinr_db`, times `mimo_factor`.
  double per_rb(double sinr_db, double mimo_factor = 1.0) const noexcept;

 private:
  double min_sinr_db_;
  std::vector<std::pair<double, double>> anchors_;
};

/// {"format": "celltrace.throughput_table", "version": 1, "min_sinr_db": -10,
///  "anchors": [[sinr_db, bps_per_rb], ...]}
ThroughputTable load_throughput_table(std::istream& in);
/// Throws Error(TableMissing) when the file cannot be opened.
ThroughputTable load_throughput_table(const std::filesystem::path& path);

}  // namespace celltrace
