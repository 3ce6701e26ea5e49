// Instantaneous and total energy costs of fast-forward protocols, measured
// against the simplest protocol (ds/dt) H(s).

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ffscale/core/linalg.hpp"
#include "ffscale/engine/frame.hpp"
#include "ffscale/engine/phase.hpp"
#include "ffscale/engine/rescaling.hpp"

namespace ffscale {

/// ||H_FF(t)|| / ||H(s)||; empty where the original norm vanishes.
std::optional<double> instantaneous_cost(double ff_norm, double original_norm);

/// int_0^T_FF ||H_FF|| dt / int_0^T ||H|| dt by composite Simpson on the two
/// uniform grids.
double total_cost(std::span<const double> ff_norms, const TimeGrid& ff_grid, std::span<const double> original_norms,
                  const TimeGrid& original_grid);

struct CostReport {
  TimeGrid grid;                              // fast-forward time grid
  std::vector<double> ff_norm;                // ||H_FF(t_k)||
  std::vector<double> original_norm;          // ||H(s(t_k))||
  std::vector<std::optional<double>> delta_C; // empty where ||H(s)|| = 0
  std::vector<double> delta_C_std;            // |ds/dt|
  double C = 0.0;
  double C_std = 0.0;
  double ff_integral = 0.0;        // int ||H_FF|| dt over [0, T_FF]
  double original_integral = 0.0;  // int ||H|| ds over [0, T]
};

using NormFn = std::function<double(double)>;

/// Samples both norms on `steps` uniform intervals of [0, T_FF] and [0, T]
/// and assembles the instantaneous and total costs with their standard
/// counterparts. `ff_norm` takes fast-forward time, `original_norm` original time.
CostReport evaluate_costs(const NormFn& ff_norm, const NormFn& original_norm, const Rescaling& r, std::size_t steps);

/// Same, with ||H_FF|| from squared_ff_norm and ||H|| from hs_norm.
CostReport evaluate_costs(const HamiltonianFn& hamiltonian, const Rescaling& r, const MeasurementFrame& frame,
                          const PhaseProfile& phases, std::size_t steps);

/// Evolves psi0 under (ds/dt)H(s(t)), which tracks |Psi(s(t))>, and under the
/// assembled H_FF(t) on the same grid over [0, T_FF]; returns the largest
/// difference of outcome probabilities in the frame over grid points and labels.
double verify_probability_invariance(const HamiltonianFn& hamiltonian, const Rescaling& r,
                                     const MeasurementFrame& frame, const PhaseProfile& phases,
                                     const StateVector& psi0, const TimeGrid& grid);

}  // namespace ffscale
