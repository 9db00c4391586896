#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "celltrace/pipeline/run_config.hpp"

namespace celltrace {

/// Pipeline stages in run order; each writes into <out>/<stage>/ together
/// with a manifest.json.
inline constexpr std::string_view kCommands[] = {
    "ingest",   "reconstruct", "train-demand", "gen-demand", "train-deploy", "gen-deploy",
    "validate", "capacity",    "project",      "heal",       "report"};

bool is_command(std::string_view name) noexcept;

/// Log verbosity: "off", "error", "warn", "info" or "debug"; messages go to
/// stderr. Throws Error(ConfigError) for other names.
void configure_logging(std::string_view level);

/// Runs one command. Stochastic commands need cfg.seed (Error(ConfigError)
/// otherwise); a missing or stale upstream artifact is
/// Error(PipelineOrderError). Returns the stage directory.
std::filesystem::path run_command(std::string_view command, const RunConfig& cfg);

/// Re-hashes every artifact listed by the stage manifests under `out_dir`
/// and checks that each upstream manifest a stage names matches the
/// current one. Returns one message per broken link; empty when intact.
std::vector<std::string> verify_manifest_chain(const std::filesystem::path& out_dir);

}  // namespace celltrace
