// Two-level system H(t) = omega(t) Z + Gamma(t) X in the Pauli-Z frame.

#pragma once

#include <functional>

#include "ffscale/core/linalg.hpp"
#include "ffscale/engine/frame.hpp"
#include "ffscale/engine/phase.hpp"
#include "ffscale/engine/rescaling.hpp"

namespace ffscale::models {

struct TwoLevelSchedule {
  using Fn = std::function<double(double)>;

  Fn omega;   // longitudinal field
  Fn gamma;   // transverse field
  Fn domega;  // d omega / ds
  Fn dgamma;  // d Gamma / ds

  /// omega(s) = omega0 - 2 omega0 s / T, Gamma(s) = Gamma0.
  static TwoLevelSchedule magnetization_reversal(double omega0, double gamma0, double T);
  static TwoLevelSchedule constant(double omega, double gamma);
};

HermitianOperator two_level_hamiltonian(const TwoLevelSchedule& sched, double t);
HamiltonianFn two_level_hamiltonian_fn(TwoLevelSchedule sched);

/// Pauli-Z frame with labels "+" (Z = +1, index 0) and "-" (index 1).
MeasurementFrame pauli_z_frame();

/// df_+-/dt = +-(ds/dt) omega(s), integrated from zero over `grid`.
PhaseProfile two_level_optimal_phase(const TwoLevelSchedule& sched, const Rescaling& r, const TimeGrid& grid);

/// (ds/dt) Gamma(s) [cos(f_+ - f_-) X - sin(f_+ - f_-) Y] with `phases` from
/// two_level_optimal_phase; purely off-diagonal in the Z frame.
HermitianOperator two_level_optimal_ff(const TwoLevelSchedule& sched, const Rescaling& r, const PhaseProfile& phases,
                                       double t);

/// |ds/dt| sqrt(Gamma^2 / (omega^2 + Gamma^2)) at s(t).
double two_level_optimal_cost(const TwoLevelSchedule& sched, const Rescaling& r, double t);

}  // namespace ffscale::models
