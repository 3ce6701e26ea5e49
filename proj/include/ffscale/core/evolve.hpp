// Fixed-step Schrodinger propagation, i d|psi>/dt = H(t)|psi>.

#pragma once

#include <vector>

#include "ffscale/core/linalg.hpp"

namespace ffscale {

struct EvolveOptions {
  /// Largest tolerated | |psi(t)|^2 - |psi(0)|^2 | over the run; exceeding it
  /// throws NumericalError, meaning the grid must be refined.
  double max_norm_drift = 1e-9;
};

struct Trajectory {
  std::vector<StateVector> states;  // one per grid point
  double norm_drift = 0.0;
};

/// Classical fourth-order Runge-Kutta on the uniform grid.
Trajectory evolve(const HamiltonianFn& hamiltonian, const StateVector& initial, const TimeGrid& grid,
                  const EvolveOptions& options = {});

}  // namespace ffscale
