#include "celltrace/core/types.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "celltrace/core/error.hpp"

namespace celltrace {

std::string_view to_string(AreaType a) noexcept {
  switch (a) {
    case AreaType::Urban: return "urban";
    case AreaType::Suburban: return "suburban";
    case AreaType::Rural: return "rural";
  }
  return "urban";
}

std::optional<AreaType> parse_area_type(std::string_view s) noexcept {
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "urban") return AreaType::Urban;
  if (lower == "suburban") return AreaType::Suburban;
  if (lower == "rural") return AreaType::Rural;
  return std::nullopt;
}

std::string_view to_string(BsClass c) noexcept {
  return c == BsClass::Macro ? "macro" : "micro";
}

BaseStation make_base_station(std::string id, std::string op, BsClass cls,
                              Point position, const Grid& grid,
                              const BsDefaults& defaults) {
  BaseStation bs;
  bs.id = std::move(id);
  bs.op = std::move(op);
  bs.cls = cls;
  bs.position = position;
  bs.latlon = grid.unproject(position);
  bs.tile = grid.to_tile(position);
  bs.tx_power_dbm =
      cls == BsClass::Macro ? defaults.macro_tx_power_dbm : defaults.micro_tx_power_dbm;
  bs.height_m = cls == BsClass::Macro ? defaults.macro_height_m : defaults.micro_height_m;
  bs.site_id = bs.id;
  return bs;
}

std::string_view to_string(ErrorCode code) noexcept {
  static constexpr std::array<std::string_view, 21> names{
      "OutOfExtent",      "FileError",       "SchemaError",
      "UsersAbsent",      "MissingTier",     "DegenerateCell",
      "TooFewSites",      "EmptyTrace",      "UnseenState",
      "ModelAreaMissing", "UnseenContext",   "IndexMismatch",
      "InvalidK",         "GridMismatch",    "NonPositiveInput",
      "TableMissing",     "NotStruggling",   "StrategyOrderViolation",
      "PipelineOrderError", "ConfigError",   "InvalidArgument"};
  return names[static_cast<std::size_t>(code)];
}

}  // namespace celltrace
