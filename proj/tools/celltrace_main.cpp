#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <optional>

#include "celltrace/core/error.hpp"
#include "celltrace/pipeline/pipeline.hpp"

namespace {

int fail(std::string_view command, std::string_view code, const std::string& message, int status) {
  nlohmann::ordered_json j;
  j["status"] = "error";
  j["command"] = command;
  j["error"] = code;
  j["message"] = message;
  std::cout << j.dump() << std::endl;
  return status;
}

template <class T>
void set_if(std::optional<T>& dst, const CLI::Option* opt, const T& value) {
  if (opt->count() > 0) dst = value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trace-driven cellular network synthesis and capacity planning"};
  app.set_version_flag("--version", CELLTRACE_VERSION);
  app.require_subcommand(1, 1);

  std::string config;
  std::uint64_t seed = 0;
  std::string out, op, strategies, reuse;
  double tile_m = 0.0, horizon = 0.0;
  int k = 0;
  app.add_option("--config", config, "Run configuration (JSON)")->required()->check(CLI::ExistingFile);
  auto* o_seed = app.add_option("--seed", seed, "Root seed for stochastic commands");
  auto* o_out = app.add_option("--out", out, "Output directory");
  auto* o_op = app.add_option("--operator", op, "Restrict radio commands to one operator");
  auto* o_tile = app.add_option("--grid-tile-m", tile_m, "Synthesis tile size in meters");
  auto* o_k = app.add_option("--k", k, "Cross-validation folds");
  auto* o_h = app.add_option("--horizon-years", horizon, "Projection horizon");
  auto* o_s = app.add_option("--strategies", strategies, "e.g. mimo,refarm5,refarm10,comp,abs");
  auto* o_r = app.add_option("--reuse", reuse, "Frequency reuse")->check(CLI::IsMember({"flex", "k1"}));

  const char* help[] = {"Parse and clean the trace",
                        "Rebuild cells and place base stations",
                        "Train the demand Markov model",
                        "Generate synthetic demand",
                        "Train the deployment model",
                        "Generate a synthetic deployment",
                        "k-fold fidelity of both generators",
                        "SINR, reuse plan and pressure at the combined peak",
                        "Project peak demand",
                        "Run the healing cascade",
                        "Summarize all stages"};
  std::size_t i = 0;
  for (std::string_view name : celltrace::kCommands)
    app.add_subcommand(std::string(name), help[i++])->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("", "UsageError", e.what(), 2);
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    const char* level = std::getenv("CELLTRACE_LOG");
    celltrace::configure_logging(level && *level ? level : "warn");

    celltrace::RunConfig cfg = celltrace::load_run_config(config);
    celltrace::ConfigOverrides ov;
    set_if(ov.seed, o_seed, seed);
    if (o_out->count()) ov.out_dir = out;
    set_if(ov.op, o_op, op);
    set_if(ov.tile_m, o_tile, tile_m);
    set_if(ov.k, o_k, k);
    set_if(ov.horizon_years, o_h, horizon);
    set_if(ov.strategies, o_s, strategies);
    set_if(ov.reuse, o_r, reuse);
    celltrace::apply_overrides(cfg, ov);

    const auto dir = celltrace::run_command(command, cfg);
    nlohmann::ordered_json j;
    j["status"] = "ok";
    j["command"] = command;
    j["output"] = dir.string();
    std::cout << j.dump() << std::endl;
    return 0;
  } catch (const celltrace::Error& e) {
    return fail(command, celltrace::to_string(e.code()), e.what(), 1);
  } catch (const std::exception& e) {
    return fail(command, "InternalError", e.what(), 1);
  }
}
