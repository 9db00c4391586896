#include "celltrace/pipeline/pipeline.hpp"

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "celltrace/core/error.hpp"
#include "celltrace/core/random.hpp"
#include "celltrace/deploy/bayes.hpp"
#include "celltrace/ingest/area_map.hpp"
#include "celltrace/ingest/csv.hpp"
#include "celltrace/ingest/mobility.hpp"
#include "celltrace/ingest/spectrum.hpp"
#include "celltrace/io/format.hpp"
#include "celltrace/io/geojson.hpp"
#include "celltrace/io/manifest.hpp"
#include "celltrace/io/network.hpp"
#include "celltrace/radio/capacity.hpp"
#include "celltrace/radio/peak.hpp"
#include "celltrace/radio/reuse.hpp"
#include "celltrace/radio/throughput.hpp"
#include "celltrace/reconstruct/coverage.hpp"
#include "celltrace/reconstruct/delaunay.hpp"
#include "celltrace/validate/cross_validation.hpp"

namespace celltrace {

namespace {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

constexpr const char* kManifest = "manifest.json";

std::string grid_param(const CoreConfig& core) {
  nlohmann::json j = to_json(core.grid);
  j["utc_offset_hours"] = core.utc_offset_hours;
  return j.dump();
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ",") + s;
  return out;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  for (auto& f : csv::split_line(s))
    if (!f.empty()) out.push_back(f);
  return out;
}

std::uint64_t require_seed(const RunConfig& cfg, std::string_view command) {
  if (!cfg.seed)
    throw Error(ErrorCode::ConfigError,
                std::string(command) + " is stochastic and needs a seed (--seed or \"seed\")");
  return *cfg.seed;
}

std::ifstream open_in(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorCode::FileError, "cannot open " + p.string());
  return in;
}

ojson read_json(const fs::path& p) {
  auto in = open_in(p);
  try {
    return ojson::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SchemaError, p.string() + ": " + e.what());
  }
}

/// Output directory of one command. Construction wipes earlier results, so a
/// stage without a manifest never looks complete.
class Stage {
 public:
  Stage(const RunConfig& cfg, std::string name) : name_(std::move(name)), dir_(cfg.out_dir / name_) {
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    params_["grid"] = grid_param(cfg.core);
  }

  const fs::path& dir() const noexcept { return dir_; }

  fs::path output(const std::string& rel) {
    if (std::find(outputs_.begin(), outputs_.end(), rel) == outputs_.end()) outputs_.push_back(rel);
    const fs::path p = dir_ / rel;
    fs::create_directories(p.parent_path());
    return p;
  }

  template <class F>
  void write(const std::string& rel, F&& fill) {
    const fs::path p = output(rel);
    std::ofstream out(p, std::ios::binary);
    if (!out) throw Error(ErrorCode::FileError, "cannot write " + p.string());
    fill(out);
    if (!out) throw Error(ErrorCode::FileError, "write failed: " + p.string());
  }

  void write_json(const std::string& rel, const ojson& j) {
    write(rel, [&](std::ostream& o) { o << j.dump(1) << '\n'; });
  }

  void raw_input(const fs::path& p) {
    if (!p.empty()) inputs_.push_back({relative_to(p, dir_), sha256_file(p)});
  }
  void upstream_input(const fs::path& manifest) {
    inputs_.push_back({relative_to(manifest, dir_), sha256_file(manifest)});
  }
  void param(const std::string& k, std::string v) { params_[k] = std::move(v); }
  void seed(std::uint64_t s) { seed_ = s; }

  fs::path finish() {
    Manifest m;
    m.command = name_;
    m.tool_version = CELLTRACE_VERSION;
    m.seed = seed_;
    m.parameters.assign(params_.begin(), params_.end());
    m.inputs = inputs_;
    for (const auto& rel : outputs_) m.outputs.push_back({rel, sha256_file(dir_ / rel)});
    m.write(dir_ / kManifest);
    spdlog::info("{}: {} outputs in {}", name_, outputs_.size(), dir_.string());
    return dir_;
  }

 private:
  std::string name_;
  fs::path dir_;
  std::map<std::string, std::string> params_;
  std::vector<ArtifactRef> inputs_;
  std::optional<std::uint64_t> seed_;
  std::vector<std::string> outputs_;
};

/// Artifacts of a completed upstream command, checked against its manifest.
class Upstream {
 public:
  Upstream(const RunConfig& cfg, const std::string& name) : name_(name), dir_(cfg.out_dir / name) {
    manifest_ = Manifest::read(dir_ / kManifest);
    const auto grid = param("grid");
    if (grid && *grid != grid_param(cfg.core))
      throw Error(ErrorCode::GridMismatch,
                  name + " outputs were produced on a different grid; re-run it");
  }

  static bool exists(const RunConfig& cfg, const std::string& name) {
    return fs::exists(cfg.out_dir / name / kManifest);
  }

  const Manifest& manifest() const noexcept { return manifest_; }
  fs::path manifest_path() const { return dir_ / kManifest; }

  bool has(const std::string& rel) const {
    return std::any_of(manifest_.outputs.begin(), manifest_.outputs.end(),
                       [&](const ArtifactRef& r) { return r.path == rel; });
  }

  /// Path of an output, after checking it is unchanged since the manifest.
  fs::path file(const std::string& rel) const {
    for (const ArtifactRef& r : manifest_.outputs) {
      if (r.path != rel) continue;
      const fs::path p = dir_ / rel;
      if (!fs::exists(p) || sha256_file(p) != r.sha256)
        throw Error(ErrorCode::PipelineOrderError,
                    name_ + "/" + rel + " changed after " + name_ + " ran; re-run " + name_);
      return p;
    }
    throw Error(ErrorCode::PipelineOrderError, name_ + " did not produce " + rel);
  }

  std::optional<std::string> param(const std::string& k) const {
    for (const auto& [key, v] : manifest_.parameters)
      if (key == k) return v;
    return std::nullopt;
  }

 private:
  std::string name_;
  fs::path dir_;
  Manifest manifest_;
};

TraceTable load_trace(const RunConfig& cfg, const Upstream& ingest) {
  return parse_trace(ingest.file("trace.csv"), cfg.core.grid, cfg.core.utc_offset_hours).table;
}

Network load_network(const RunConfig& cfg, const Upstream& rec) {
  return read_network_json(rec.file("network.json"), cfg.core.grid);
}

ThroughputTable load_table(const RunConfig& cfg) {
  return cfg.throughput.empty() ? ThroughputTable::reference()
                                : load_throughput_table(cfg.throughput);
}

std::vector<AreaType> station_areas(const Network& net, const AreaMap& areas) {
  std::vector<AreaType> out;
  for (const BaseStation& bs : net.stations) out.push_back(areas.at(bs.tile));
  return out;
}

/// "value,cdf" at every distinct finite value.
void write_cdf(std::ostream& out, std::vector<double> v) {
  v.erase(std::remove_if(v.begin(), v.end(), [](double x) { return !std::isfinite(x); }),
          v.end());
  std::sort(v.begin(), v.end());
  out << "value,cdf\n";
  const double n = static_cast<double>(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i + 1 == v.size() || v[i + 1] != v[i])
      out << fmt(v[i]) << ',' << fmt(static_cast<double>(i + 1) / n) << '\n';
}

std::string class_name(BsClass c) { return std::string(to_string(c)); }

std::vector<Location> analysis_locations(const Grid& grid) {
  std::vector<Location> locs(grid.analysis_count());
  for (std::size_t i = 0; i < locs.size(); ++i)
    locs[i] = {grid.analysis_center(grid.analysis_at(i)), i};
  return locs;
}

std::vector<std::string> select_operators(const RunConfig& cfg, const Network& net,
                                          const SpectrumPlan& spectrum) {
  std::set<std::string> in_net;
  for (const BaseStation& bs : net.stations) in_net.insert(bs.op);
  if (!cfg.operators.empty()) {
    for (const auto& op : cfg.operators) {
      if (!in_net.count(op))
        throw Error(ErrorCode::InvalidArgument, "operator '" + op + "' has no reconstructed BS");
      if (!spectrum.operators().count(op))
        throw Error(ErrorCode::MissingTier, "operator '" + op + "' is not in the spectrum plan");
    }
    return cfg.operators;
  }
  std::vector<std::string> ops;
  for (const auto& op : in_net) {
    if (spectrum.operators().count(op)) ops.push_back(op);
    else spdlog::warn("operator {} has no spectrum entry; skipped", op);
  }
  if (ops.empty())
    throw Error(ErrorCode::MissingTier, "no reconstructed operator appears in the spectrum plan");
  return ops;
}

RadioScenario build_scenario(const RunConfig& cfg, const Network& net,
                             const SpectrumPlan& spectrum, const std::string& op,
                             std::uint64_t root_seed) {
  std::vector<BaseStation> stations;
  for (const BaseStation& bs : net.stations)
    if (bs.op == op) stations.push_back(bs);
  RadioConfig rc = cfg.radio;
  rc.los_seed = derive_seed(root_seed, "los");
  return RadioScenario(std::move(stations), spectrum, analysis_locations(cfg.core.grid), rc);
}

template <class F>
void for_csv_rows(const fs::path& p, std::size_t fields, F&& row) {
  auto in = open_in(p);
  std::string line;
  std::getline(in, line);
  std::size_t n = 1;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty()) continue;
    const auto f = csv::split_line(line);
    if (f.size() != fields)
      throw Error(ErrorCode::SchemaError, p.string() + ":" + std::to_string(n) + ": bad row");
    row(f);
  }
}

double num(const std::string& s) {
  if (s == "nan") return std::nan("");
  if (s == "inf") return INFINITY;
  const auto v = csv::parse_number<double>(s);
  if (!v) throw Error(ErrorCode::SchemaError, "bad number '" + s + "'");
  return *v;
}

std::size_t location_of(const Grid& grid, const std::vector<std::string>& f) {
  const RasterCell c{static_cast<int>(num(f[0])), static_cast<int>(num(f[1]))};
  if (c.row < 0 || c.col < 0 || c.row >= grid.analysis_rows() || c.col >= grid.analysis_cols())
    throw Error(ErrorCode::SchemaError, "raster cell out of range");
  return grid.analysis_index(c);
}

// ---------------------------------------------------------------------------

fs::path cmd_ingest(const RunConfig& cfg) {
  Stage st(cfg, "ingest");
  st.raw_input(cfg.trace);
  st.raw_input(cfg.area_map);
  st.raw_input(cfg.spectrum);
  st.raw_input(cfg.throughput);

  auto parsed = parse_trace(cfg.trace, cfg.core.grid, cfg.core.utc_offset_hours);
  if (parsed.table.empty()) throw Error(ErrorCode::EmptyTrace, "no usable trace records");
  load_area_map(cfg.area_map, cfg.core.grid);
  const SpectrumPlan spectrum = load_spectrum(cfg.spectrum);
  load_table(cfg);
  const TraceTable& t = parsed.table;

  st.write("trace.csv", [&](std::ostream& o) { write_trace_csv(o, t); });

  ojson rej;
  rej["input_rows"] = parsed.report.input_rows;
  rej["accepted"] = t.size();
  rej["rejected"] = parsed.report.rejected();
  ojson counts = ojson::object();
  for (std::size_t r = 0; r < kRejectReasonCount; ++r)
    counts[std::string(to_string(static_cast<RejectReason>(r)))] = parsed.report.counts[r];
  rej["by_reason"] = counts;
  auto samples = ojson::array();
  for (const auto& [line, reason] : parsed.report.samples)
    samples.push_back({{"line", line}, {"reason", to_string(reason)}});
  rej["samples"] = samples;
  st.write_json("rejections.json", rej);

  if (t.has_users()) {
    const MobilityFlags flags = classify_mobility(t);
    st.write("mobility.csv", [&](std::ostream& o) {
      o << "user_id,slot,class\n";
      for (const auto& [key, m] : flags)
        o << csv::escape(key.first) << ',' << key.second << ','
          << (m == Mobility::Mobile ? "mobile" : "static") << '\n';
    });
  }

  std::set<std::string> ops;
  for (const auto& [key, idx] : t.by_cell()) ops.insert(key.op);
  ojson sum;
  sum["records"] = t.size();
  sum["slots"] = t.slot_count();
  sum["first_ts_hour"] = t.first_ts_hour();
  sum["anchor_dow"] = to_string(t.calendar().anchor_dow());
  sum["anchor_hour"] = t.calendar().anchor_hour();
  sum["users"] = t.by_user().size();
  sum["cells"] = t.by_cell().size();
  sum["operators"] = std::vector<std::string>(ops.begin(), ops.end());
  sum["spectrum_operators"] = spectrum.operators().size();
  st.write_json("summary.json", sum);
  return st.finish();
}

fs::path cmd_reconstruct(const RunConfig& cfg) {
  const Upstream ing(cfg, "ingest");
  Stage st(cfg, "reconstruct");
  st.upstream_input(ing.manifest_path());
  st.param("lte_only", cfg.cells.lte_only ? "1" : "0");
  st.param("macro_watershed_m", fmt(cfg.cells.macro_watershed_m));
  st.param("omni_roundness", fmt(cfg.placement.omni_roundness));
  st.param("colocation_radius_m", fmt(cfg.placement.colocation_radius_m));

  const Grid& grid = cfg.core.grid;
  const TraceTable trace = load_trace(cfg, ing);
  const std::vector<CellRecord> cells = build_cells(trace, cfg.cells);
  if (cells.empty()) throw Error(ErrorCode::EmptyTrace, "no records carry a cell id");
  Network net;
  net.stations = place_bs(cells, grid, cfg.placement);
  for (const CellRecord& c : cells) net.keys.push_back(c.key);

  st.write("cells.csv", [&](std::ostream& o) { write_cells_csv(o, cells); });
  st.write("bs.csv", [&](std::ostream& o) { write_bs_csv(o, net.stations); });
  st.write("network.json", [&](std::ostream& o) { write_network_json(o, net); });

  FeatureCollection hulls;
  for (const CellRecord& c : cells) {
    if (c.degenerate) continue;
    ojson props{{"id", bs_id(c.key)}, {"operator", c.key.op}, {"class", to_string(c.cls)},
                {"roundness", *c.roundness}, {"range_m", c.range_m}, {"area_m2", c.area_m2}};
    hulls.add_polygon(ring_of(grid, c.hull), std::move(props));
  }
  hulls.write(st.output("cells.geojson"));

  FeatureCollection points;
  for (const BaseStation& bs : net.stations) {
    ojson props{{"id", bs.id},
                {"operator", bs.op},
                {"class", to_string(bs.cls)},
                {"antenna", bs.antenna.kind == Antenna::Kind::Omni ? "omni" : "sector"},
                {"degenerate", bs.degenerate}};
    if (bs.antenna.kind == Antenna::Kind::Sector) props["azimuth_deg"] = bs.antenna.azimuth_deg;
    points.add_point(bs.latlon, std::move(props));
  }
  points.write(st.output("bs.geojson"));

  const CoverageRaster density = coverage_density(cells, grid);
  st.write("density.csv", [&](std::ostream& o) {
    o << "row,col,count\n";
    for (int r = 0; r < density.rows; ++r)
      for (int c = 0; c < density.cols; ++c) o << r << ',' << c << ',' << density.at({r, c}) << '\n';
  });
  FeatureCollection dens;
  for (int r = 0; r < density.rows; ++r)
    for (int c = 0; c < density.cols; ++c)
      if (const int n = density.at({r, c}); n > 0)
        dens.add_polygon(square_ring(grid, {c * density.cell_m, r * density.cell_m}, density.cell_m),
                         ojson{{"row", r}, {"col", c}, {"count", n}});
  dens.write(st.output("density.geojson"));

  std::vector<double> round;
  std::map<BsClass, std::vector<double>> ranges;
  for (const CellRecord& c : cells) {
    if (c.roundness) round.push_back(*c.roundness);
    ranges[c.cls].push_back(c.range_m);
  }
  st.write("cdf_roundness.csv", [&](std::ostream& o) { write_cdf(o, round); });

  ojson sum;
  sum["cells"] = cells.size();
  sum["degenerate"] = std::count_if(cells.begin(), cells.end(),
                                    [](const CellRecord& c) { return c.degenerate; });
  ojson classes = ojson::object();
  for (BsClass cls : {BsClass::Macro, BsClass::Micro}) {
    const std::string name = class_name(cls);
    ojson cj;
    cj["cells"] = ranges[cls].size();
    if (!ranges[cls].empty())
      st.write("cdf_range_" + name + ".csv", [&](std::ostream& o) { write_cdf(o, ranges[cls]); });
    const Deployment dep = deployment_from(net.stations, grid, cls);
    cj["bs"] = dep.total();
    st.write("deployment_" + name + ".csv", [&](std::ostream& o) { write_deployment_csv(o, dep); });
    try {
      const InterSiteDistances isd = inter_site_distance(net.stations, cls);
      st.write("isd_" + name + ".csv", [&](std::ostream& o) {
        o << "site_id,operator,neighbors,mean_distance_m\n";
        for (const SiteDistance& s : isd.sites)
          o << csv::escape(s.site_id) << ',' << csv::escape(s.op) << ',' << s.neighbor_count
            << ',' << fmt(s.mean_neighbor_distance_m) << '\n';
      });
      st.write("cdf_isd_" + name + ".csv", [&](std::ostream& o) { write_cdf(o, isd.sorted_m); });
      cj["mean_isd_m"] = isd.mean_m;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TooFewSites) throw;
      spdlog::warn("reconstruct: {}", e.what());
      cj["mean_isd_m"] = nullptr;
    }
    classes[name] = cj;
  }
  sum["classes"] = classes;
  std::map<std::string, std::size_t> per_op;
  for (const BaseStation& bs : net.stations) ++per_op[bs.op];
  sum["bs_per_operator"] = per_op;
  st.write_json("summary.json", sum);
  return st.finish();
}

std::string_view keying_name(TimeKeying k) {
  switch (k) {
    case TimeKeying::DowHour: return "dow_hour";
    case TimeKeying::Hour: return "hour";
    case TimeKeying::None: return "none";
  }
  return "?";
}

fs::path cmd_train_demand(const RunConfig& cfg) {
  const Upstream ing(cfg, "ingest");
  const Upstream rec(cfg, "reconstruct");
  Stage st(cfg, "train-demand");
  st.upstream_input(ing.manifest_path());
  st.upstream_input(rec.manifest_path());
  st.raw_input(cfg.area_map);
  st.param("keying", std::string(keying_name(cfg.markov.keying)));
  st.param("levels", std::to_string(cfg.markov.levels));

  const TraceTable trace = load_trace(cfg, ing);
  const Network net = load_network(cfg, rec);
  const AreaMap areas = load_area_map(cfg.area_map, cfg.core.grid);
  const DemandMatrix delta = normalize_demand(raw_demand(trace, net.keys, Tech::LTE));
  const std::vector<AreaType> a = station_areas(net, areas);
  TransitionModel model = train_demand(delta, a, trace.calendar(), cfg.markov);
  for (const ArtifactRef& r : ing.manifest().outputs)
    if (r.path == "trace.csv") model.metadata().trace_id = r.sha256;

  st.write("delta.csv", [&](std::ostream& o) { write_demand_csv(o, delta); });
  st.write("transition_model.json", [&](std::ostream& o) { model.to_json(o); });
  ojson cal;
  cal["slots"] = trace.slot_count();
  cal["anchor_dow"] = static_cast<int>(trace.calendar().anchor_dow());
  cal["anchor_hour"] = trace.calendar().anchor_hour();
  cal["first_ts_hour"] = trace.first_ts_hour();
  st.write_json("calendar.json", cal);
  ojson sum;
  sum["bs"] = delta.bs_count();
  sum["zero_rows"] = std::count(delta.zero_rows().begin(), delta.zero_rows().end(), true);
  sum["states"] = model.state_count();
  st.write_json("summary.json", sum);
  return st.finish();
}

fs::path cmd_gen_demand(const RunConfig& cfg) {
  const std::uint64_t seed = require_seed(cfg, "gen-demand");
  const Upstream td(cfg, "train-demand");
  const Upstream rec(cfg, "reconstruct");
  Stage st(cfg, "gen-demand");
  st.upstream_input(td.manifest_path());
  st.upstream_input(rec.manifest_path());
  st.raw_input(cfg.area_map);
  st.seed(seed);

  auto min = open_in(td.file("transition_model.json"));
  const TransitionModel model = TransitionModel::from_json(min);
  const ojson cal = read_json(td.file("calendar.json"));
  const SlotCalendar calendar(static_cast<DayOfWeek>(cal.at("anchor_dow").get<int>()),
                              cal.at("anchor_hour").get<int>());
  const std::int64_t slots = cal.at("slots").get<std::int64_t>();
  const Network net = load_network(cfg, rec);
  const AreaMap areas = load_area_map(cfg.area_map, cfg.core.grid);
  std::vector<std::string> ids;
  for (const BaseStation& bs : net.stations) ids.push_back(bs.id);

  GenerationStats gs;
  const DemandMatrix synth = generate_demand(model, ids, station_areas(net, areas), slots,
                                             calendar, derive_seed(seed, "gen-demand"), &gs);
  st.write("synthetic_demand.csv", [&](std::ostream& o) { write_demand_csv(o, synth); });
  ojson g;
  g["seed"] = seed;
  g["bs"] = ids.size();
  g["slots"] = slots;
  g["unseen_states"] = gs.unseen_states;
  g["held_values"] = gs.held_values;
  g["initial_fallbacks"] = gs.initial_fallbacks;
  st.write_json("generation.json", g);
  return st.finish();
}

fs::path cmd_train_deploy(const RunConfig& cfg) {
  const Upstream rec(cfg, "reconstruct");
  Stage st(cfg, "train-deploy");
  st.upstream_input(rec.manifest_path());
  st.raw_input(cfg.area_map);

  const AreaMap areas = load_area_map(cfg.area_map, cfg.core.grid);
  ojson sum = ojson::object();
  for (BsClass cls : {BsClass::Macro, BsClass::Micro}) {
    const std::string name = class_name(cls);
    auto in = open_in(rec.file("deployment_" + name + ".csv"));
    const Deployment dep = read_deployment_csv(in, cfg.core.grid.rows(), cfg.core.grid.cols());
    if (dep.total() == 0) {
      spdlog::info("train-deploy: no {} BSs, no model", name);
      continue;
    }
    const DeployModel model = train_deployment(dep, areas);
    st.write("deploy_model_" + name + ".json", [&](std::ostream& o) { model.to_json(o); });
    sum[name] = {{"bs", dep.total()}, {"contexts", model.counters().size()}};
  }
  st.write_json("summary.json", sum);
  return st.finish();
}

fs::path cmd_gen_deploy(const RunConfig& cfg) {
  const std::uint64_t seed = require_seed(cfg, "gen-deploy");
  const Upstream tdp(cfg, "train-deploy");
  Stage st(cfg, "gen-deploy");
  st.upstream_input(tdp.manifest_path());
  st.raw_input(cfg.area_map);
  st.seed(seed);
  st.param("passes", std::to_string(cfg.deploy_passes));
  st.param("placement", cfg.site_placement == SitePlacement::TileCenter ? "center" : "uniform");

  const Grid& grid = cfg.core.grid;
  const AreaMap areas = load_area_map(cfg.area_map, grid);
  ojson gen;
  gen["seed"] = seed;
  gen["passes"] = cfg.deploy_passes;
  for (BsClass cls : {BsClass::Macro, BsClass::Micro}) {
    const std::string name = class_name(cls);
    const std::string model_file = "deploy_model_" + name + ".json";
    if (!tdp.has(model_file)) continue;
    auto in = open_in(tdp.file(model_file));
    const DeployModel model = DeployModel::from_json(in);
    DeployGenerationStats gs;
    const Deployment dep = generate_deployment(model, areas, derive_seed(seed, "gen-deploy:" + name),
                                               cfg.deploy_passes, &gs);
    st.write("deployment_" + name + ".csv", [&](std::ostream& o) { write_deployment_csv(o, dep); });
    FeatureCollection fc;
    for (std::size_t i = 0; i < dep.size(); ++i) {
      if (dep[i] == 0) continue;
      const TileId t = dep.tile_at(i);
      fc.add_polygon(square_ring(grid, {t.col * grid.tile_size_m(), t.row * grid.tile_size_m()},
                                 grid.tile_size_m()),
                     ojson{{"row", t.row}, {"col", t.col}, {"count", dep[i]}});
    }
    fc.write(st.output("deployment_" + name + ".geojson"));
    const auto sites = materialize(dep, grid, cls, "synthetic", derive_seed(seed, "sites:" + name),
                                   cfg.site_placement, cfg.placement.defaults);
    st.write("synthetic_bs_" + name + ".csv", [&](std::ostream& o) { write_bs_csv(o, sites); });
    gen[name] = {{"bs", dep.total()}, {"nearest_beta", gs.nearest_beta}, {"uniform", gs.uniform}};
  }
  st.write_json("generation.json", gen);
  return st.finish();
}

void write_cdf_series(std::ostream& o, const char* series, const EmpiricalCdf& cdf) {
  for (const auto& [v, p] : cdf) o << series << ',' << v << ',' << fmt(p) << '\n';
}

fs::path cmd_validate(const RunConfig& cfg) {
  const std::uint64_t seed = require_seed(cfg, "validate");
  const Upstream ing(cfg, "ingest");
  Stage st(cfg, "validate");
  st.upstream_input(ing.manifest_path());
  st.raw_input(cfg.area_map);
  st.seed(seed);
  st.param("k", std::to_string(cfg.k));
  st.param("keying", std::string(keying_name(cfg.markov.keying)));
  st.param("levels", std::to_string(cfg.markov.levels));
  st.param("passes", std::to_string(cfg.deploy_passes));

  const TraceTable trace = load_trace(cfg, ing);
  const AreaMap areas = load_area_map(cfg.area_map, cfg.core.grid);
  CrossValidationOptions opts;
  opts.k = cfg.k;
  opts.seed = derive_seed(seed, "validate");
  opts.markov = cfg.markov;
  opts.deploy_passes = cfg.deploy_passes;
  opts.cells = cfg.cells;
  opts.placement = cfg.placement;
  opts.deployment = cfg.validate_deployment;
  const FidelityReport rep = cross_validate(trace, cfg.core.grid, areas, opts);

  ojson j;
  j["k"] = rep.k;
  j["seed"] = seed;
  j["fold_users"] = rep.fold_users;
  j["rmse"] = {{"hour", rep.rmse_hour}, {"bs", rep.rmse_b}, {"bs_slot", rep.rmse_bk}};
  ojson dj = ojson::object();
  for (const auto& [cls, s] : rep.deployment)
    dj[class_name(cls)] = {{"ks_tile", s.ks_tile},
                           {"ks_neighborhood", s.ks_neigh},
                           {"mean_tile_real", s.real_tile_mean},
                           {"mean_tile_synthetic", s.synth_tile_mean},
                           {"mean_neighborhood_real", s.real_neigh_mean},
                           {"mean_neighborhood_synthetic", s.synth_neigh_mean}};
  j["deployment"] = dj;
  st.write_json("fidelity.json", j);
  st.write("profile.csv", [&](std::ostream& o) {
    o << "hour,real,synthetic\n";
    for (int h = 0; h < 24; ++h)
      o << h << ',' << fmt(rep.profile_real[static_cast<std::size_t>(h)]) << ','
        << fmt(rep.profile_synth[static_cast<std::size_t>(h)]) << '\n';
  });
  st.write("bs_totals.csv", [&](std::ostream& o) {
    o << "bs_id,real,synthetic\n";
    for (std::size_t b = 0; b < rep.bs_ids.size(); ++b)
      o << csv::escape(rep.bs_ids[b]) << ',' << fmt(rep.totals_real[b]) << ','
        << fmt(rep.totals_synth[b]) << '\n';
  });
  for (const auto& [cls, s] : rep.deployment) {
    st.write("deploy_cdf_" + class_name(cls) + ".csv", [&](std::ostream& o) {
      o << "series,value,cdf\n";
      write_cdf_series(o, "real_tile", s.real_tile);
      write_cdf_series(o, "synthetic_tile", s.synth_tile);
      write_cdf_series(o, "real_neighborhood", s.real_neigh);
      write_cdf_series(o, "synthetic_neighborhood", s.synth_neigh);
    });
  }
  return st.finish();
}

const char* kLocationDemandHeader =
    "row,col,lte_static,lte_mobile,lte_unknown,g3_static,g3_mobile,g3_unknown";

fs::path cmd_capacity(const RunConfig& cfg) {
  const std::uint64_t seed = require_seed(cfg, "capacity");
  const Upstream ing(cfg, "ingest");
  const Upstream rec(cfg, "reconstruct");
  Stage st(cfg, "capacity");
  st.upstream_input(ing.manifest_path());
  st.upstream_input(rec.manifest_path());
  st.raw_input(cfg.spectrum);
  st.raw_input(cfg.throughput);
  st.seed(seed);

  const Grid& grid = cfg.core.grid;
  const TraceTable trace = load_trace(cfg, ing);
  const Network net = load_network(cfg, rec);
  const SpectrumPlan spectrum = load_spectrum(cfg.spectrum);
  const ThroughputTable table = load_table(cfg);
  const std::vector<std::string> ops = select_operators(cfg, net, spectrum);
  st.param("operators", join(ops));
  st.param("reuse", cfg.flexible_reuse ? "flex" : "k1");
  st.param("mobility", trace.has_users() ? "1" : "0");
  st.param("area_block_m", fmt(cfg.reuse.area_block_m));
  st.param("min_sinr_db", fmt(cfg.reuse.min_sinr_db));

  std::optional<MobilityFlags> flags;
  if (trace.has_users()) flags = classify_mobility(trace);
  const std::vector<LocationDemand> demand =
      peak_location_demand(trace, grid, combined_peak(trace), flags ? &*flags : nullptr);

  ojson summary = ojson::object();
  for (const std::string& op : ops) {
    const RadioScenario sc = build_scenario(cfg, net, spectrum, op, seed);
    const std::size_t L = sc.location_count();
    std::vector<double> d(L, 0.0);
    std::vector<const LocationDemand*> rows;
    for (const LocationDemand& ld : demand) {
      if (ld.op != op) continue;
      d[grid.analysis_index(ld.cell)] = ld.lte_total();
      rows.push_back(&ld);
    }

    ReusePlan plan = reuse_one(sc.bs_count());
    ojson reuse_j;
    if (cfg.flexible_reuse) {
      const ReuseResult rr = optimize_reuse(sc, table, d, cfg.reuse);
      plan = rr.plan;
      reuse_j = {{"mode", "flex"},
                 {"sweeps", rr.sweeps},
                 {"evaluations", rr.evaluations},
                 {"accepted", rr.trajectory.size()},
                 {"baseline_served", rr.baseline.served},
                 {"baseline_throughput_bps", rr.baseline.throughput_bps},
                 {"final_served", rr.final_objective.served},
                 {"final_throughput_bps", rr.final_objective.throughput_bps}};
    } else {
      const ReuseObjective obj = reuse_objective(sc, plan, table, d, cfg.reuse.min_sinr_db);
      reuse_j = {{"mode", "k1"},
                 {"final_served", obj.served},
                 {"final_throughput_bps", obj.throughput_bps}};
    }
    const SinrField field = compute_sinr(sc, plan);
    const CapacityState cap = evaluate_capacity(sc, plan, table, d);
    const std::vector<double> pr = pressure(cap);

    st.write(op + "/reuse_plan.csv", [&](std::ostream& o) {
      o << "bs_id,k,sub_band\n";
      for (std::size_t b = 0; b < sc.bs_count(); ++b)
        o << csv::escape(sc.stations()[b].id) << ',' << plan[b].k << ',' << plan[b].sub_band
          << '\n';
    });
    st.write(op + "/location_demand.csv", [&](std::ostream& o) {
      o << kLocationDemandHeader << '\n';
      for (const LocationDemand* ld : rows) {
        o << ld->cell.row << ',' << ld->cell.col;
        for (double v : ld->lte_bps) o << ',' << fmt(v);
        for (double v : ld->g3_bps) o << ',' << fmt(v);
        o << '\n';
      }
    });
    st.write(op + "/sinr.csv", [&](std::ostream& o) {
      o << "row,col,serving,sinr_db,snr_db\n";
      for (std::size_t l = 0; l < L; ++l) {
        const RasterCell c = grid.analysis_at(l);
        const std::int32_t s = field.serving[l];
        o << c.row << ',' << c.col << ','
          << (s < 0 ? std::string() : csv::escape(sc.stations()[static_cast<std::size_t>(s)].id))
          << ',' << fmt(field.sinr_db[l]) << ',' << fmt(field.snr_db[l]) << '\n';
      }
    });
    FeatureCollection sinr_fc;
    const double cm = grid.analysis_cell_m();
    for (std::size_t l = 0; l < L; ++l) {
      if (field.serving[l] < 0) continue;
      const RasterCell c = grid.analysis_at(l);
      sinr_fc.add_polygon(square_ring(grid, {c.col * cm, c.row * cm}, cm),
                          ojson{{"row", c.row}, {"col", c.col}, {"sinr_db", field.sinr_db[l]}});
    }
    sinr_fc.write(st.output(op + "/sinr.geojson"));

    std::vector<double> pressure_demand;
    st.write(op + "/pressure.csv", [&](std::ostream& o) {
      o << "row,col,demand_bps,capacity_bps,pressure\n";
      for (const LocationDemand* ld : rows) {
        const std::size_t l = grid.analysis_index(ld->cell);
        o << ld->cell.row << ',' << ld->cell.col << ',' << fmt(cap.demand_bps[l]) << ','
          << fmt(cap.capacity_bps[l]) << ',' << fmt(pr[l]) << '\n';
        if (cap.demand_bps[l] > 0.0) pressure_demand.push_back(pr[l]);
      }
    });
    FeatureCollection pfc;
    for (const LocationDemand* ld : rows) {
      const std::size_t l = grid.analysis_index(ld->cell);
      if (cap.demand_bps[l] <= 0.0) continue;
      pfc.add_polygon(square_ring(grid, {ld->cell.col * cm, ld->cell.row * cm}, cm),
                      ojson{{"row", ld->cell.row},
                            {"col", ld->cell.col},
                            {"pressure", std::isfinite(pr[l]) ? ojson(pr[l]) : ojson("inf")}});
    }
    pfc.write(st.output(op + "/pressure.geojson"));
    st.write(op + "/cdf_sinr.csv", [&](std::ostream& o) { write_cdf(o, field.sinr_db); });
    st.write(op + "/cdf_pressure.csv", [&](std::ostream& o) { write_cdf(o, pressure_demand); });

    std::size_t k3 = 0;
    for (const auto& a : plan) k3 += a.k == 3;
    summary[op] = {{"bs", sc.bs_count()},
                   {"locations", L},
                   {"uncovered", field.uncovered},
                   {"demand_locations", pressure_demand.size()},
                   {"struggling", cap.struggling_set().size()},
                   {"k3_bs", k3},
                   {"reuse", reuse_j}};
  }
  st.write_json("summary.json", summary);
  return st.finish();
}

std::vector<LocationDemand> read_location_demand(const fs::path& p, const Grid& grid,
                                                 const std::string& op) {
  std::vector<LocationDemand> out;
  for_csv_rows(p, 8, [&](const std::vector<std::string>& f) {
    LocationDemand ld;
    ld.op = op;
    ld.cell = grid.analysis_at(location_of(grid, f));
    for (std::size_t i = 0; i < 3; ++i) {
      ld.lte_bps[i] = num(f[2 + i]);
      ld.g3_bps[i] = num(f[5 + i]);
    }
    out.push_back(ld);
  });
  return out;
}

fs::path cmd_project(const RunConfig& cfg) {
  const Upstream cap(cfg, "capacity");
  Stage st(cfg, "project");
  st.upstream_input(cap.manifest_path());
  cfg.projection.validate();
  const bool mobility = cfg.use_mobility && cap.param("mobility") == "1";
  st.param("horizon_years", fmt(cfg.projection.horizon_years));
  st.param("cagr_mobile", fmt(cfg.projection.cagr_mobile));
  st.param("cagr_static", fmt(cfg.projection.cagr_static));
  st.param("cagr_combined", fmt(cfg.projection.cagr_combined));
  st.param("include_3g", cfg.projection.include_3g ? "1" : "0");
  st.param("use_mobility", mobility ? "1" : "0");

  const std::vector<std::string> ops = split(cap.param("operators").value_or(""));
  ojson sum;
  sum["factors"] = {{"static", cfg.projection.factor(MobilityClass::Static)},
                    {"mobile", cfg.projection.factor(MobilityClass::Mobile)},
                    {"combined", cfg.projection.factor(MobilityClass::Unknown)}};
  ojson per_op = ojson::object();
  for (const std::string& op : ops) {
    const auto ld = read_location_demand(cap.file(op + "/location_demand.csv"), cfg.core.grid, op);
    const std::vector<double> proj = project_demand(ld, cfg.projection, mobility);
    double present = 0.0, future = 0.0;
    st.write(op + "/projected.csv", [&](std::ostream& o) {
      o << "row,col,present_bps,projected_bps\n";
      for (std::size_t i = 0; i < ld.size(); ++i) {
        o << ld[i].cell.row << ',' << ld[i].cell.col << ',' << fmt(ld[i].lte_total()) << ','
          << fmt(proj[i]) << '\n';
        present += ld[i].lte_total();
        future += proj[i];
      }
    });
    per_op[op] = {{"present_bps", present}, {"projected_bps", future}};
  }
  sum["operators"] = per_op;
  st.write_json("summary.json", sum);
  return st.finish();
}

const char* reason_color(StruggleReason r) {
  switch (r) {
    case StruggleReason::Interference: return "#d62728";
    case StruggleReason::CellEdge: return "#1f77b4";
    case StruggleReason::LackOfRBs: return "#ff7f0e";
  }
  return "#000000";
}

ojson stage_json(const StageResult& s) {
  ojson by = ojson::object();
  for (std::size_t r = 0; r < kStruggleReasonCount; ++r)
    by[std::string(to_string(static_cast<StruggleReason>(r)))] = s.healed_by_reason[r];
  return {{"name", s.name},         {"struggling_before", s.struggling_before},
          {"healed", s.healed},     {"percent", s.percent},
          {"healed_by_reason", by}, {"newly_struggling", s.newly_struggling}};
}

fs::path cmd_heal(const RunConfig& cfg) {
  const Upstream cap(cfg, "capacity");
  const Upstream proj(cfg, "project");
  const Upstream rec(cfg, "reconstruct");
  Stage st(cfg, "heal");
  st.upstream_input(cap.manifest_path());
  st.upstream_input(proj.manifest_path());
  st.upstream_input(rec.manifest_path());
  st.raw_input(cfg.spectrum);
  st.raw_input(cfg.throughput);
  const auto strategies = parse_strategies(cfg.strategies);
  st.param("strategies", cfg.strategies);
  st.param("mimo_factor", fmt(cfg.healing.mimo_factor));
  st.param("spare_fraction", fmt(cfg.healing.spare_fraction));
  st.param("abs_fraction", fmt(cfg.healing.abs_fraction));
  if (!cap.manifest().seed)
    throw Error(ErrorCode::PipelineOrderError, "capacity manifest lacks its seed");
  const std::uint64_t seed = *cap.manifest().seed;

  const Grid& grid = cfg.core.grid;
  const Network net = load_network(cfg, rec);
  const SpectrumPlan spectrum = load_spectrum(cfg.spectrum);
  const ThroughputTable table = load_table(cfg);
  const std::vector<std::string> ops = split(cap.param("operators").value_or(""));

  ojson sum = ojson::object();
  for (const std::string& op : ops) {
    const RadioScenario sc = build_scenario(cfg, net, spectrum, op, seed);
    std::map<std::string, std::size_t> index;
    for (std::size_t b = 0; b < sc.bs_count(); ++b) index[sc.stations()[b].id] = b;
    ReusePlan plan = reuse_one(sc.bs_count());
    std::size_t seen = 0;
    for_csv_rows(cap.file(op + "/reuse_plan.csv"), 3, [&](const std::vector<std::string>& f) {
      const auto it = index.find(f[0]);
      if (it == index.end())
        throw Error(ErrorCode::PipelineOrderError, "reuse plan names unknown BS " + f[0]);
      plan[it->second] = {static_cast<int>(num(f[1])), static_cast<int>(num(f[2]))};
      ++seen;
    });
    if (seen != sc.bs_count())
      throw Error(ErrorCode::PipelineOrderError, "reuse plan does not match the network");
    std::vector<double> demand(sc.location_count(), 0.0);
    for_csv_rows(proj.file(op + "/projected.csv"), 4, [&](const std::vector<std::string>& f) {
      demand[location_of(grid, f)] = num(f[3]);
    });

    const HealingLedger led = heal_cascade(sc, plan, table, demand, strategies, cfg.healing);

    ojson lj;
    lj["operator"] = op;
    lj["struggling"] = led.struggling;
    ojson by = ojson::object();
    for (std::size_t r = 0; r < kStruggleReasonCount; ++r)
      by[std::string(to_string(static_cast<StruggleReason>(r)))] = led.by_reason[r];
    lj["by_reason"] = by;
    lj["stages"] = ojson::array();
    for (const StageResult& s : led.stages) lj["stages"].push_back(stage_json(s));
    lj["variants"] = ojson::array();
    for (const StageResult& s : led.variants) lj["variants"].push_back(stage_json(s));
    lj["struggling_after"] = led.struggling_after;
    lj["residual"] = led.residual.size();
    lj["comp_links"] = led.comp_links;
    std::vector<std::string> muted;
    for (std::size_t b : led.muted) muted.push_back(sc.stations()[b].id);
    lj["abs_muted"] = muted;
    st.write_json(op + "/ledger.json", lj);

    st.write(op + "/stages.csv", [&](std::ostream& o) {
      o << "kind,stage,struggling_before,healed,percent,newly_struggling,interference,cell_edge,"
           "lack_of_rbs\n";
      auto row = [&](const char* kind, const StageResult& s) {
        o << kind << ',' << s.name << ',' << s.struggling_before << ',' << s.healed << ','
          << fmt(s.percent) << ',' << s.newly_struggling;
        for (std::size_t v : s.healed_by_reason) o << ',' << v;
        o << '\n';
      };
      for (const StageResult& s : led.stages) row("stage", s);
      for (const StageResult& s : led.variants) row("variant", s);
    });
    st.write(op + "/reasons.csv", [&](std::ostream& o) {
      o << "reason,struggling";
      for (const StageResult& s : led.stages) o << ',' << s.name;
      o << ",residual\n";
      for (std::size_t r = 0; r < kStruggleReasonCount; ++r) {
        const auto reason = static_cast<StruggleReason>(r);
        o << to_string(reason) << ',' << led.by_reason[r];
        for (const StageResult& s : led.stages) o << ',' << s.healed_by_reason[r];
        std::size_t residual = 0;
        for (const LocationOutcome& lo : led.locations)
          residual += lo.reason == reason && lo.healed_stage < 0;
        o << ',' << residual << '\n';
      }
    });
    FeatureCollection fc;
    const double cm = grid.analysis_cell_m();
    st.write(op + "/locations.csv", [&](std::ostream& o) {
      o << "row,col,demand_bps,capacity_bps,sinr_db,snr_db,reason,healed_by\n";
      for (const LocationOutcome& lo : led.locations) {
        const RasterCell c = grid.analysis_at(lo.location);
        const std::string healed =
            lo.healed_stage < 0 ? "residual"
                                : led.stages[static_cast<std::size_t>(lo.healed_stage)].name;
        o << c.row << ',' << c.col << ',' << fmt(lo.demand_bps) << ',' << fmt(lo.capacity_bps)
          << ',' << fmt(lo.sinr_db) << ',' << fmt(lo.snr_db) << ',' << to_string(lo.reason) << ','
          << healed << '\n';
        fc.add_polygon(square_ring(grid, {c.col * cm, c.row * cm}, cm),
                       ojson{{"row", c.row},
                             {"col", c.col},
                             {"reason", to_string(lo.reason)},
                             {"color", reason_color(lo.reason)},
                             {"healed_by", healed}});
      }
    });
    fc.write(st.output(op + "/struggling.geojson"));
    sum[op] = {{"struggling", led.struggling}, {"residual", led.residual.size()}};
  }
  st.write_json("summary.json", sum);
  return st.finish();
}

fs::path cmd_report(const RunConfig& cfg) {
  const Upstream ing(cfg, "ingest");
  const Upstream rec(cfg, "reconstruct");
  const Upstream cap(cfg, "capacity");
  const Upstream proj(cfg, "project");
  const Upstream heal(cfg, "heal");
  std::optional<Upstream> val;
  if (Upstream::exists(cfg, "validate")) val.emplace(cfg, "validate");

  Stage st(cfg, "report");
  for (const Upstream* u : {&ing, &rec, &cap, &proj, &heal}) st.upstream_input(u->manifest_path());
  if (val) st.upstream_input(val->manifest_path());

  ojson rep;
  rep["tool_version"] = CELLTRACE_VERSION;
  rep["ingest"] = read_json(ing.file("summary.json"));
  rep["reconstruct"] = read_json(rec.file("summary.json"));
  if (val) rep["validate"] = read_json(val->file("fidelity.json"));
  rep["capacity"] = read_json(cap.file("summary.json"));
  rep["project"] = read_json(proj.file("summary.json"));
  ojson ledgers = ojson::object();
  for (const std::string& op : split(cap.param("operators").value_or("")))
    ledgers[op] = read_json(heal.file(op + "/ledger.json"));
  rep["heal"] = ledgers;
  st.write_json("report.json", rep);

  st.write("report.md", [&](std::ostream& o) {
    const auto& in = rep["ingest"];
    o << "# celltrace report\n\n## Trace\n\n"
      << "| records | slots | users | cells |\n|---|---|---|---|\n| " << in["records"].dump()
      << " | " << in["slots"].dump() << " | " << in["users"].dump() << " | "
      << in["cells"].dump() << " |\n\n";
    o << "## Network\n\n| class | cells | BSs | mean inter-site distance (m) |\n|---|---|---|---|\n";
    for (const auto& [cls, cj] : rep["reconstruct"]["classes"].items())
      o << "| " << cls << " | " << cj["cells"].dump() << " | " << cj["bs"].dump() << " | "
        << (cj["mean_isd_m"].is_null() ? "n/a" : fmt(cj["mean_isd_m"].get<double>())) << " |\n";
    if (val) {
      const auto& v = rep["validate"];
      o << "\n## Fidelity (" << v["k"].dump() << "-fold)\n\n| RMSE hour | RMSE BS | RMSE BS-slot |\n"
        << "|---|---|---|\n| " << fmt(v["rmse"]["hour"].get<double>()) << " | "
        << fmt(v["rmse"]["bs"].get<double>()) << " | " << fmt(v["rmse"]["bs_slot"].get<double>())
        << " |\n";
    }
    o << "\n## Capacity\n\n| operator | BSs | K=3 BSs | demand locations | struggling today |\n"
      << "|---|---|---|---|---|\n";
    for (const auto& [op, c] : rep["capacity"].items())
      o << "| " << op << " | " << c["bs"].dump() << " | " << c["k3_bs"].dump() << " | "
        << c["demand_locations"].dump() << " | " << c["struggling"].dump() << " |\n";
    o << "\n## Healing\n\n| operator | stage | struggling before | healed | % |\n"
      << "|---|---|---|---|---|\n";
    for (const auto& [op, l] : ledgers.items()) {
      for (const auto& s : l["stages"])
        o << "| " << op << " | " << s["name"].get<std::string>() << " | "
          << s["struggling_before"].dump() << " | " << s["healed"].dump() << " | "
          << fmt(std::round(s["percent"].get<double>() * 10) / 10) << " |\n";
      o << "| " << op << " | residual | | " << l["residual"].dump() << " | |\n";
    }
  });
  return st.finish();
}

}  // namespace

void configure_logging(std::string_view level) {
  static const std::map<std::string_view, spdlog::level::level_enum> kLevels{
      {"off", spdlog::level::off},   {"error", spdlog::level::err},
      {"warn", spdlog::level::warn}, {"info", spdlog::level::info},
      {"debug", spdlog::level::debug}};
  const auto it = kLevels.find(level);
  if (it == kLevels.end())
    throw Error(ErrorCode::ConfigError, "unknown log level '" + std::string(level) + "'");
  auto logger = spdlog::stderr_color_st("celltrace");
  logger->set_pattern("[%l] %v");
  spdlog::set_default_logger(logger);
  spdlog::set_level(it->second);
}

bool is_command(std::string_view name) noexcept {
  return std::find(std::begin(kCommands), std::end(kCommands), name) != std::end(kCommands);
}

fs::path run_command(std::string_view command, const RunConfig& cfg) {
  cfg.validate();
  spdlog::info("{}: start", command);
  if (command == "ingest") return cmd_ingest(cfg);
  if (command == "reconstruct") return cmd_reconstruct(cfg);
  if (command == "train-demand") return cmd_train_demand(cfg);
  if (command == "gen-demand") return cmd_gen_demand(cfg);
  if (command == "train-deploy") return cmd_train_deploy(cfg);
  if (command == "gen-deploy") return cmd_gen_deploy(cfg);
  if (command == "validate") return cmd_validate(cfg);
  if (command == "capacity") return cmd_capacity(cfg);
  if (command == "project") return cmd_project(cfg);
  if (command == "heal") return cmd_heal(cfg);
  if (command == "report") return cmd_report(cfg);
  throw Error(ErrorCode::InvalidArgument, "unknown command '" + std::string(command) + "'");
}

std::vector<std::string> verify_manifest_chain(const fs::path& out_dir) {
  std::vector<std::string> problems;
  for (std::string_view name : kCommands) {
    const fs::path dir = out_dir / std::string(name);
    if (!fs::exists(dir / kManifest)) continue;
    const Manifest m = Manifest::read(dir / kManifest);
    for (const ArtifactRef& r : m.outputs) {
      const fs::path p = dir / r.path;
      if (!fs::exists(p) || sha256_file(p) != r.sha256)
        problems.push_back(std::string(name) + ": output " + r.path + " does not match");
    }
    for (const ArtifactRef& r : m.inputs) {
      const fs::path p = (dir / r.path).lexically_normal();
      if (!fs::exists(p) || sha256_file(p) != r.sha256)
        problems.push_back(std::string(name) + ": input " + r.path + " does not match");
    }
  }
  return problems;
}

}  // namespace celltrace
