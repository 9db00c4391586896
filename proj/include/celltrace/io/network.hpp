#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "celltrace/core/types.hpp"
#include "celltrace/ingest/trace.hpp"
#include "celltrace/reconstruct/cells.hpp"

namespace celltrace {

/// Reconstructed network: stations[i] serves cell keys[i].
struct Network {
  std::vector<CellKey> keys;
  std::vector<BaseStation> stations;
};

/// Versioned JSON (`celltrace.network` v1) that round-trips every field,
/// including coverage polygons.
void write_network_json(std::ostream& out, const Network& net);
Network read_network_json(std::istream& in, const Grid& grid);
Network read_network_json(const std::filesystem::path& path, const Grid& grid);

/// `cells.csv`: id,operator,class,area_m2,perimeter_m,roundness,range_m,samples,degenerate
void write_cells_csv(std::ostream& out, std::span<const CellRecord> cells);
/// `bs.csv`: id,operator,site_id,class,antenna,azimuth_deg,beamwidth_deg,lat,lon,x_m,y_m,
/// tile_row,tile_col,tx_power_dbm,height_m,degenerate
void write_bs_csv(std::ostream& out, std::span<const BaseStation> stations);

/// Writes the accepted records back in the input schema.
void write_trace_csv(std::ostream& out, const TraceTable& trace);

}  // namespace celltrace
