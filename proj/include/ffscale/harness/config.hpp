// Scenario configuration: a flat text file with one `dotted.key = value` per
// line. `#` starts a comment; blank lines are ignored.
//
//   model            two_level_z_basis | ising_annealing | two_level_eigenbasis   (required)
//   schedule.omega0  omega0 of the magnetization reversal   (two-level models, required)
//   schedule.gamma0  Gamma0 of the magnetization reversal   (two-level models, required)
//   ising.n          spin count, 1..12                      (annealing, required)
//   ising.seed       64-bit seed for J_ij, h_i ~ U[-1, 1]    (annealing, required)
//   ising.gamma      transverse field Gamma                  (annealing, default 1)
//   rescaling.T      original duration                       (required)
//   rescaling.T_FF   fast-forward duration                   (required)
//   rescaling.shape  linear                                  (default linear)
//   phase.mode       none | optimal | suboptimal | modulated (required)
//   phase.k          winding number for modulated phases     (default 4)
//   phase.delta      explicit modulation, overrides phase.k
//   grid.steps       intervals on [0, T_FF] and [0, T], >= 1000 (default 10000)
//   sweep.axis       none | gamma0 | gap | omega0 | delta | ising_gamma | T_FF
//   sweep.values     comma-separated values
//   sweep.range      lo:hi:count, uniform and inclusive
//   sweep.include_optimized  true | false: add the delta solving the winding condition
//   output.kind      traces | totals                         (default traces)
//   output.path      CSV file name                           (default <name>.csv)

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffscale::harness {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Model { TwoLevelZBasis, IsingAnnealing, TwoLevelEigenbasis };
enum class PhaseMode { None, Optimal, Suboptimal, Modulated };
enum class SweepAxis { None, Gamma0, Gap, Omega0, Delta, IsingGamma, TFF };
enum class OutputKind { Traces, Totals };

struct ScenarioConfig {
  std::string name = "scenario";
  Model model = Model::TwoLevelZBasis;

  double omega0 = 5.0;
  double gamma0 = 0.1;

  std::size_t n_spins = 3;
  std::uint64_t seed = 0;
  double ising_gamma = 1.0;

  double T = 10.0;
  double T_FF = 1.0;

  PhaseMode phase_mode = PhaseMode::None;
  int k = 4;
  std::optional<double> delta;

  std::size_t steps = 10000;

  SweepAxis axis = SweepAxis::None;
  std::vector<double> sweep_values;
  bool include_optimized = false;

  OutputKind output = OutputKind::Traces;
  std::string output_path;

  /// Throws ConfigError on an inconsistent combination.
  void validate() const;
};

/// Parses the key-value text; `source` names the input in error messages.
ScenarioConfig parse_config(const std::string& text, const std::string& source);

ScenarioConfig load_config(const std::string& path);

std::string to_string(Model m);
std::string to_string(PhaseMode m);
std::string to_string(SweepAxis a);

/// Names of the bundled presets, in display order.
std::vector<std::string> preset_names();
/// One-line description of a preset.
std::string preset_description(const std::string& name);
/// The configs a preset expands to (fig1 covers both panels).
std::vector<ScenarioConfig> preset_configs(const std::string& name);
/// Raw config text of a single-panel preset.
std::string preset_text(const std::string& name);

}  // namespace ffscale::harness
