#pragma once

#include <string>
#include <vector>

#include "ffscale/engine/cost.hpp"
#include "ffscale/harness/config.hpp"

namespace ffscale::harness {

/// Named real columns of equal length.
struct FigureDataset {
  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;

  void add(std::string name, std::vector<double> values);
  std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
  const std::vector<double>& column(const std::string& name) const;

  /// Throws unless there is at least one column and all lengths agree.
  void validate() const;
};

class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One sweep point after the axis value has been applied.
struct ScenarioPoint {
  std::string label;  // e.g. "gap=0.2"
  double axis_value = 0.0;
  ScenarioConfig config;
};

std::vector<ScenarioPoint> sweep_points(const ScenarioConfig& cfg);

/// Costs of a single point (no sweep).
CostReport evaluate_point(const ScenarioConfig& cfg);

/// Runs every sweep point and assembles the dataset. Traces: t, s and per point
/// dC_ratio (= dC / dC_std), dC, dC_std, ff_norm, norm; grid points where
/// ||H(s)|| = 0 are dropped. Totals: the axis value, C_ratio (= C / C_std), C,
/// C_std, ff_integral, orig_integral per point.
/// `threads` <= 1 runs sequentially; rows never depend on it.
FigureDataset run_scenario(const ScenarioConfig& cfg, unsigned threads);

/// Thread count from FFSCALE_THREADS (absent or invalid: 1).
unsigned threads_from_env();

FigureDataset run_scenario(const ScenarioConfig& cfg);

/// Modulation sweep: `count` uniform samples of delta on [lo, hi] plus the
/// delta solving the winding condition for cfg.k. A degenerate range [a, a]
/// yields the single trace at a.
FigureDataset sweep_delta(ScenarioConfig cfg, double lo, double hi, std::size_t count = 21);

}  // namespace ffscale::harness
