#include "celltrace/ingest/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "celltrace/core/error.hpp"

namespace celltrace {

int resource_blocks(double bandwidth_mhz, int guard_rbs) noexcept {
  // Work in kHz so values like 0.9 MHz do not floor to one RB short.
  const int rbs = static_cast<int>(std::floor(bandwidth_mhz * 1000.0 / 180.0 + 1e-9));
  return std::max(0, rbs - guard_rbs);
}

SpectrumPlan::SpectrumPlan(std::map<std::string, std::vector<Band>> bands)
    : bands_(std::move(bands)) {
  for (const auto& [op, list] : bands_) {
    bool macro = false;
    bool micro = false;
    double macro_ghz = 0.0;
    double min_micro_ghz = 1e300;
    for (const Band& b : list) {
      if (!(b.bandwidth_mhz > 0.0) || !(b.center_ghz > 0.0))
        throw Error(ErrorCode::SchemaError,
                    "band " + b.label + " of " + op + " needs positive frequency and bandwidth");
      if (b.tier == Tier::Macro && !macro) {
        macro = true;
        macro_ghz = b.center_ghz;
      }
      if (b.tier == Tier::Micro) {
        micro = true;
        min_micro_ghz = std::min(min_micro_ghz, b.center_ghz);
      }
    }
    if (!macro || !micro)
      throw Error(ErrorCode::MissingTier,
                  "operator " + op + " lacks a " + (macro ? "micro" : "macro") + " band");
    if (macro_ghz > min_micro_ghz)
      throw Error(ErrorCode::SchemaError,
                  "operator " + op + ": macro tier must use the lowest-frequency band");
  }
}

const Band& SpectrumPlan::band_for(const std::string& op, Tier tier) const {
  const auto it = bands_.find(op);
  if (it == bands_.end())
    throw Error(ErrorCode::MissingTier, "no spectrum configured for operator " + op);
  for (const Band& b : it->second)
    if (b.tier == tier) return b;
  throw Error(ErrorCode::MissingTier, "operator " + op + " lacks a band for the tier");
}

SpectrumPlan load_spectrum(std::istream& in) {
  std::map<std::string, std::vector<Band>> bands;
  try {
    const auto doc = nlohmann::json::parse(in);
    for (const auto& [op, list] : doc.at("operators").items()) {
      auto& out = bands[op];
      for (const auto& jb : list) {
        Band b;
        b.label = jb.at("band").is_string() ? jb.at("band").get<std::string>()
                                            : jb.at("band").dump();
        b.center_ghz = jb.at("center_ghz").get<double>();
        b.bandwidth_mhz = jb.at("bandwidth_mhz").get<double>();
        const std::string tier = jb.at("tier").get<std::string>();
        if (tier == "macro") {
          b.tier = Tier::Macro;
        } else if (tier == "micro") {
          b.tier = Tier::Micro;
        } else {
          throw Error(ErrorCode::SchemaError, "tier must be 'macro' or 'micro'");
        }
        b.guard_rbs = jb.value("guard_rbs", 0);
        out.push_back(std::move(b));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SchemaError, std::string("spectrum plan: ") + e.what());
  }
  return SpectrumPlan(std::move(bands));
}

SpectrumPlan load_spectrum(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::FileError, "cannot open spectrum plan " + path.string());
  return load_spectrum(in);
}

}  // namespace celltrace
