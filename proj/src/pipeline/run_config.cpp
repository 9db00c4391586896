#include "celltrace/pipeline/run_config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "celltrace/core/error.hpp"

namespace celltrace {

namespace {

using json = nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ConfigError, what); }

void only_keys(const json& obj, const std::string& where, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) bad(where + " must be an object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : obj.items())
    if (!allowed.count(k)) bad("unknown key '" + k + "' in " + where);
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  const std::filesystem::path path(p);
  return (path.is_absolute() ? path : base / path).lexically_normal();
}

TimeKeying parse_keying(const std::string& s) {
  if (s == "dow_hour") return TimeKeying::DowHour;
  if (s == "hour") return TimeKeying::Hour;
  if (s == "none") return TimeKeying::None;
  bad("demand.keying must be dow_hour, hour or none");
}

RefarmTier parse_refarm_tier(const std::string& s) {
  if (s == "macro") return RefarmTier::Macro;
  if (s == "micro") return RefarmTier::Micro;
  if (s == "both") return RefarmTier::Both;
  bad("healing.refarm_tier must be macro, micro or both");
}

bool parse_reuse(const std::string& s) {
  if (s == "flex") return true;
  if (s == "k1") return false;
  bad("reuse must be flex or k1");
}

void require_file(const std::filesystem::path& p, const char* what) {
  if (p.empty()) bad(std::string(what) + " path is required");
  std::error_code ec;
  if (!std::filesystem::is_regular_file(p, ec))
    bad(std::string(what) + " file not found: " + p.string());
}

}  // namespace

void RunConfig::validate() const {
  require_file(trace, "inputs.trace");
  require_file(area_map, "inputs.area_map");
  require_file(spectrum, "inputs.spectrum");
  if (!throughput.empty()) require_file(throughput, "inputs.throughput");
  if (k < 2) bad("k must be at least 2");
  if (deploy_passes < 1) bad("deploy.passes must be at least 1");
  if (markov.levels < 2 || markov.levels > 101) bad("demand.levels must be in [2, 101]");
  if (!(reuse.area_block_m > 0.0)) bad("radio.area_block_m must be positive");
  if (!(healing.mimo_factor > 0.0)) bad("healing.mimo_factor must be positive");
  if (healing.spare_fraction < 0.0 || healing.spare_fraction > 1.0)
    bad("healing.spare_fraction must be in [0, 1]");
  if (healing.abs_fraction < 0.0 || healing.abs_fraction > 1.0)
    bad("healing.abs_fraction must be in [0, 1]");
  projection.validate();
  parse_strategies(strategies);
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::FileError, "cannot open config " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    bad(std::string("config is not valid JSON: ") + e.what());
  }
  only_keys(doc, "config",
            {"grid", "calendar", "inputs", "output_dir", "seed", "operators", "reconstruct",
             "demand", "deploy", "validate", "radio", "projection", "healing"});
  const auto base = std::filesystem::absolute(path).parent_path();

  RunConfig cfg(core_config_from_json(doc));
  try {
    if (!doc.contains("inputs")) bad("config needs an inputs section");
    const auto& inputs = doc["inputs"];
    only_keys(inputs, "inputs", {"trace", "area_map", "spectrum", "throughput"});
    cfg.trace = resolve(base, inputs.at("trace").get<std::string>());
    cfg.area_map = resolve(base, inputs.at("area_map").get<std::string>());
    cfg.spectrum = resolve(base, inputs.at("spectrum").get<std::string>());
    if (inputs.contains("throughput"))
      cfg.throughput = resolve(base, inputs["throughput"].get<std::string>());
    cfg.out_dir = resolve(base, doc.value("output_dir", std::string("out")));
    if (doc.contains("seed") && !doc["seed"].is_null()) {
      if (!doc["seed"].is_number_unsigned()) bad("seed must be a non-negative integer");
      cfg.seed = doc["seed"].get<std::uint64_t>();
    }
    if (doc.contains("operators"))
      cfg.operators = doc["operators"].get<std::vector<std::string>>();

    if (doc.contains("reconstruct")) {
      const auto& r = doc["reconstruct"];
      only_keys(r, "reconstruct",
                {"lte_only", "macro_watershed_m", "omni_roundness", "colocation_radius_m",
                 "sector_beamwidth_deg", "macro_tx_power_dbm", "micro_tx_power_dbm",
                 "macro_height_m", "micro_height_m"});
      cfg.cells.lte_only = r.value("lte_only", cfg.cells.lte_only);
      cfg.cells.macro_watershed_m = r.value("macro_watershed_m", cfg.cells.macro_watershed_m);
      auto& p = cfg.placement;
      p.omni_roundness = r.value("omni_roundness", p.omni_roundness);
      p.colocation_radius_m = r.value("colocation_radius_m", p.colocation_radius_m);
      p.sector_beamwidth_deg = r.value("sector_beamwidth_deg", p.sector_beamwidth_deg);
      p.defaults.macro_tx_power_dbm = r.value("macro_tx_power_dbm", p.defaults.macro_tx_power_dbm);
      p.defaults.micro_tx_power_dbm = r.value("micro_tx_power_dbm", p.defaults.micro_tx_power_dbm);
      p.defaults.macro_height_m = r.value("macro_height_m", p.defaults.macro_height_m);
      p.defaults.micro_height_m = r.value("micro_height_m", p.defaults.micro_height_m);
    }
    if (doc.contains("demand")) {
      const auto& d = doc["demand"];
      only_keys(d, "demand", {"keying", "levels"});
      if (d.contains("keying")) cfg.markov.keying = parse_keying(d["keying"].get<std::string>());
      cfg.markov.levels = d.value("levels", cfg.markov.levels);
    }
    if (doc.contains("deploy")) {
      const auto& d = doc["deploy"];
      only_keys(d, "deploy", {"passes", "placement"});
      cfg.deploy_passes = d.value("passes", cfg.deploy_passes);
      const std::string placement = d.value("placement", std::string("uniform"));
      if (placement == "uniform") cfg.site_placement = SitePlacement::UniformInTile;
      else if (placement == "center") cfg.site_placement = SitePlacement::TileCenter;
      else bad("deploy.placement must be uniform or center");
    }
    if (doc.contains("validate")) {
      const auto& v = doc["validate"];
      only_keys(v, "validate", {"k", "deployment"});
      cfg.k = v.value("k", cfg.k);
      cfg.validate_deployment = v.value("deployment", cfg.validate_deployment);
    }
    if (doc.contains("radio")) {
      const auto& r = doc["radio"];
      only_keys(r, "radio",
                {"noise_figure_db", "sector_side_lobe_db", "macro_radius_m", "micro_radius_m",
                 "ue_height_m", "reuse", "area_block_m", "min_sinr_db", "max_sweeps"});
      auto& rc = cfg.radio;
      rc.noise_figure_db = r.value("noise_figure_db", rc.noise_figure_db);
      rc.sector_side_lobe_db = r.value("sector_side_lobe_db", rc.sector_side_lobe_db);
      rc.macro_radius_m = r.value("macro_radius_m", rc.macro_radius_m);
      rc.micro_radius_m = r.value("micro_radius_m", rc.micro_radius_m);
      rc.ue_height_m = r.value("ue_height_m", rc.ue_height_m);
      if (r.contains("reuse")) cfg.flexible_reuse = parse_reuse(r["reuse"].get<std::string>());
      cfg.reuse.area_block_m = r.value("area_block_m", cfg.reuse.area_block_m);
      cfg.reuse.min_sinr_db = r.value("min_sinr_db", cfg.reuse.min_sinr_db);
      cfg.reuse.max_sweeps = r.value("max_sweeps", cfg.reuse.max_sweeps);
    }
    if (doc.contains("projection")) {
      const auto& p = doc["projection"];
      only_keys(p, "projection",
                {"horizon_years", "cagr_mobile", "cagr_static", "cagr_combined", "include_3g",
                 "use_mobility"});
      auto& pr = cfg.projection;
      pr.horizon_years = p.value("horizon_years", pr.horizon_years);
      pr.cagr_mobile = p.value("cagr_mobile", pr.cagr_mobile);
      pr.cagr_static = p.value("cagr_static", pr.cagr_static);
      pr.cagr_combined = p.value("cagr_combined", pr.cagr_combined);
      pr.include_3g = p.value("include_3g", pr.include_3g);
      cfg.use_mobility = p.value("use_mobility", cfg.use_mobility);
    }
    if (doc.contains("healing")) {
      const auto& h = doc["healing"];
      only_keys(h, "healing",
                {"strategies", "mimo_factor", "spare_fraction", "abs_fraction", "abs_patience",
                 "refarm_tier", "abs_k1_variant", "good_sinr_db", "weak_snr_db"});
      auto& ho = cfg.healing;
      cfg.strategies = h.value("strategies", cfg.strategies);
      ho.mimo_factor = h.value("mimo_factor", ho.mimo_factor);
      ho.spare_fraction = h.value("spare_fraction", ho.spare_fraction);
      ho.abs_fraction = h.value("abs_fraction", ho.abs_fraction);
      ho.abs_patience = h.value("abs_patience", ho.abs_patience);
      if (h.contains("refarm_tier"))
        ho.refarm_tier = parse_refarm_tier(h["refarm_tier"].get<std::string>());
      ho.abs_k1_variant = h.value("abs_k1_variant", ho.abs_k1_variant);
      ho.good_sinr_db = h.value("good_sinr_db", ho.good_sinr_db);
      ho.weak_snr_db = h.value("weak_snr_db", ho.weak_snr_db);
    }
  } catch (const json::exception& e) {
    bad(std::string("config: ") + e.what());
  }
  return cfg;
}

void apply_overrides(RunConfig& cfg, const ConfigOverrides& o) {
  if (o.seed) cfg.seed = *o.seed;
  if (o.out_dir) cfg.out_dir = std::filesystem::absolute(*o.out_dir).lexically_normal();
  if (o.op) cfg.operators = {*o.op};
  if (o.k) cfg.k = *o.k;
  if (o.horizon_years) cfg.projection.horizon_years = *o.horizon_years;
  if (o.strategies) cfg.strategies = *o.strategies;
  if (o.reuse) cfg.flexible_reuse = parse_reuse(*o.reuse);
  if (o.tile_m) {
    const Grid& g = cfg.core.grid;
    if (!(*o.tile_m > 0.0)) bad("--grid-tile-m must be positive");
    const int rows = static_cast<int>(std::ceil(g.height_m() / *o.tile_m - 1e-9));
    const int cols = static_cast<int>(std::ceil(g.width_m() / *o.tile_m - 1e-9));
    try {
      cfg.core.grid = Grid(g.origin(), rows, cols, *o.tile_m, g.analysis_cell_m());
    } catch (const Error& e) {
      bad(e.what());
    }
  }
}

}  // namespace celltrace
