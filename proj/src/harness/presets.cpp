#include <map>
#include <utility>

#include "ffscale/harness/config.hpp"

namespace ffscale::harness {

namespace {

struct Preset {
  std::string description;
  std::string text;
};

const std::vector<std::pair<std::string, Preset>>& presets() {
  static const std::vector<std::pair<std::string, Preset>> table = {
      {"fig1-left",
       {"eigenbasis, first-term optimal phases: instantaneous cost for gaps 0.2, 0.4, 0.8",
        R"(name = fig1_left
model = two_level_eigenbasis
schedule.omega0 = 5
schedule.gamma0 = 0.1
rescaling.T = 10
rescaling.T_FF = 1
phase.mode = optimal
grid.steps = 10000
sweep.axis = gap
sweep.values = 0.2, 0.4, 0.8
output.kind = traces
)"}},
      {"fig1-right",
       {"eigenbasis, first-term optimal phases: total cost for gaps 0.25, 0.5, ..., 5",
        R"(name = fig1_right
model = two_level_eigenbasis
schedule.omega0 = 5
schedule.gamma0 = 0.1
rescaling.T = 10
rescaling.T_FF = 1
phase.mode = optimal
grid.steps = 10000
sweep.axis = gap
sweep.range = 0.25:5:20
output.kind = totals
)"}},
      {"fig2",
       {"eigenbasis, Gamma0 = 0.1: unmodulated vs modulated (delta = 0.00326) phases",
        R"(name = fig2
model = two_level_eigenbasis
schedule.omega0 = 5
schedule.gamma0 = 0.1
rescaling.T = 10
rescaling.T_FF = 1
phase.mode = modulated
phase.k = 4
grid.steps = 10000
sweep.axis = delta
sweep.values = 0, 0.00326
output.kind = traces
)"}},
      {"fig3",
       {"eigenbasis, Gamma0 = 0.1: delta from 0.002 to 0.004 (21 samples) plus the k = 4 optimum",
        R"(name = fig3
model = two_level_eigenbasis
schedule.omega0 = 5
schedule.gamma0 = 0.1
rescaling.T = 10
rescaling.T_FF = 1
phase.mode = modulated
phase.k = 4
grid.steps = 10000
sweep.axis = delta
sweep.range = 0.002:0.004:21
sweep.include_optimized = true
output.kind = traces
)"}},
      {"zbasis",
       {"Pauli-Z frame, optimal phases: instantaneous cost for Gamma0 = 0.1, 0.5, 1",
        R"(name = zbasis
model = two_level_z_basis
schedule.omega0 = 5
schedule.gamma0 = 0.1
rescaling.T = 10
rescaling.T_FF = 1
phase.mode = optimal
grid.steps = 10000
sweep.axis = gamma0
sweep.values = 0.1, 0.5, 1
output.kind = traces
)"}},
      {"annealing",
       {"N = 4 spin glass (seed 2024), field-cancelling phases: instantaneous cost",
        R"(name = annealing
model = ising_annealing
ising.n = 4
ising.seed = 2024
ising.gamma = 1
rescaling.T = 10
rescaling.T_FF = 1
phase.mode = suboptimal
grid.steps = 10000
output.kind = traces
)"}},
  };
  return table;
}

const Preset& find(const std::string& name) {
  for (const auto& [key, p] : presets()) {
    if (key == name) return p;
  }
  throw ConfigError("unknown preset '" + name + "' (see list-presets)");
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> names{"fig1"};
  for (const auto& [key, p] : presets()) names.push_back(key);
  return names;
}

std::string preset_description(const std::string& name) {
  if (name == "fig1") return "both panels: fig1-left and fig1-right";
  return find(name).description;
}

std::string preset_text(const std::string& name) { return find(name).text; }

std::vector<ScenarioConfig> preset_configs(const std::string& name) {
  if (name == "fig1") return {preset_configs("fig1-left").front(), preset_configs("fig1-right").front()};
  return {parse_config(find(name).text, "preset:" + name)};
}

}  // namespace ffscale::harness
