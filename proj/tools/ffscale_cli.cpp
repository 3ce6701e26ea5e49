// ffscale: run fast-forward energy-cost scenarios and write CSV datasets.
//
//   ffscale run <config> [--out FILE] [--steps N] [--seed S]
//   ffscale preset <name> [--out DIR] [--steps N] [--seed S]
//   ffscale list-presets
//
// FFSCALE_THREADS sets the number of worker threads for sweeps.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ffscale/harness/config.hpp"
#include "ffscale/harness/csv.hpp"
#include "ffscale/harness/scenario.hpp"

namespace fh = ffscale::harness;

namespace {

struct Overrides {
  std::optional<std::size_t> steps;
  std::optional<std::uint64_t> seed;
};

void apply(fh::ScenarioConfig& cfg, const Overrides& o) {
  if (o.steps) cfg.steps = *o.steps;
  if (o.seed) cfg.seed = *o.seed;
  cfg.validate();
}

void run_one(fh::ScenarioConfig cfg, const Overrides& o, const std::string& path) {
  apply(cfg, o);
  const fh::FigureDataset ds = fh::run_scenario(cfg);
  fh::emit_csv(ds, path);
  std::cout << cfg.name << ": " << ds.rows() << " rows x " << ds.names.size() << " columns -> " << path << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy costs of fast-forward scaling"};
  app.require_subcommand(1);

  Overrides overrides;
  std::size_t steps = 0;
  std::uint64_t seed = 0;

  std::string config_path;
  std::string run_out;
  auto* run = app.add_subcommand("run", "Run a scenario from a config file");
  run->add_option("config", config_path, "Config file")->required()->check(CLI::ExistingFile);
  run->add_option("--out", run_out, "Output CSV (default: output.path from the config)");

  std::string preset_name;
  std::string preset_dir = ".";
  auto* preset = app.add_subcommand("preset", "Run a bundled preset");
  preset->add_option("name", preset_name, "Preset name (see list-presets)")->required();
  preset->add_option("--out", preset_dir, "Output directory");

  for (auto* sub : {run, preset}) {
    sub->add_option("--steps", steps, "Override grid.steps")->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed, "Override ising.seed");
  }

  auto* list = app.add_subcommand("list-presets", "List bundled presets");

  CLI11_PARSE(app, argc, argv);

  for (auto* sub : {run, preset}) {
    if (sub->count("--steps")) overrides.steps = steps;
    if (sub->count("--seed")) overrides.seed = seed;
  }

  try {
    if (*list) {
      for (const auto& name : fh::preset_names()) std::cout << name << "\t" << fh::preset_description(name) << "\n";
      return 0;
    }
    if (*run) {
      fh::ScenarioConfig cfg = fh::load_config(config_path);
      run_one(cfg, overrides, run_out.empty() ? cfg.output_path : run_out);
      return 0;
    }
    if (*preset) {
      std::filesystem::create_directories(preset_dir);
      for (const auto& cfg : fh::preset_configs(preset_name)) {
        run_one(cfg, overrides, (std::filesystem::path(preset_dir) / cfg.output_path).string());
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "ffscale: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
