// Fast-forward scaling measured in the instantaneous energy eigenbasis at the
// rescaled time. The frame moves, so the phases can no longer cancel all of
// ||H_FF||: a counterdiabatic remainder proportional to 1 - cos(f_m - f_n)
// survives, and it peaks where the gap is smallest.

#pragma once

#include <functional>

#include "ffscale/core/linalg.hpp"
#include "ffscale/engine/frame.hpp"
#include "ffscale/engine/phase.hpp"
#include "ffscale/engine/rescaling.hpp"
#include "ffscale/models/two_level.hpp"

namespace ffscale::models {

/// Frame {|E_+(s(t))>, |E_-(s(t))>} (labels "+", "-") of omega Z + Gamma X with
/// real eigenvectors continuous in the mixing angle atan2(Gamma, omega).
/// Coupling <E_+|d_t E_-> = dtheta/dt. Rejects t where omega = Gamma = 0.
MeasurementFrame eigenframe_two_level(const TwoLevelSchedule& sched, const Rescaling& r);

/// dtheta/dt = (ds/dt) [Gamma omega' - omega Gamma'] / [2 (omega^2 + Gamma^2)].
double counterdiabatic_rate(const TwoLevelSchedule& sched, const Rescaling& r, double t);

/// sum_{+-} (df/dt - (ds/dt) E_+-)^2 + 4 (dtheta/dt)^2 [1 - cos(f_+ - f_-)].
double eigenbasis_sq_norm(const TwoLevelSchedule& sched, const Rescaling& r, const PhaseProfile& phases, double t);

/// df_+-/dt = +-(ds/dt) sqrt(omega^2 + Gamma^2): cancels the diagonal part only.
PhaseProfile eigenbasis_first_term_phase(const TwoLevelSchedule& sched, const Rescaling& r, const TimeGrid& grid);

struct ModulationParams {
  int k = 4;
  double delta = 0.0;
  double omega0 = 5.0;
  double gamma0 = 0.1;
  double T = 10.0;
  double T_FF = 1.0;

  /// Throws unless |delta| < 0.1, gamma0 > 0 and the durations are positive.
  void validate() const;
};

/// delta that makes f_+ - f_- equal 2 pi k at T_FF/2 for the magnetization
/// reversal with linear rescaling:
///   (1/T) 4 pi omega0 k / [omega0 sqrt(omega0^2 + Gamma0^2)
///                          + Gamma0^2 ln((omega0 + sqrt(omega0^2 + Gamma0^2)) / Gamma0)] - 1.
double modulation_delta(double omega0, double gamma0, double T, int k);

/// df_+-/dt = +-(1 + delta)(T/T_FF) sqrt((omega0 - 2 omega0 t/T_FF)^2 + Gamma0^2),
/// with the phases from the closed-form antiderivative.
PhaseProfile modulated_phase(const ModulationParams& params);

/// Spectral data of a general H(s): eigenvalues and <m(s)|dH/ds|n(s)>.
struct EigenbasisData {
  std::function<RealVector(double)> energies;
  std::function<ComplexMatrix(double)> dh_elements;
};

/// Eigendecomposes H(s) and projects dH/ds onto its eigenvectors.
EigenbasisData eigenbasis_data(HamiltonianFn hamiltonian, HamiltonianFn dh_ds);

/// sum_n (df_n/dt - (ds/dt) E_n)^2
///   + 2 (ds/dt)^2 sum_{m != n} |<m|dH/ds|n> / (E_n - E_m)|^2 [1 - cos(f_m - f_n)].
/// Rejects a degenerate pair of eigenvalues.
double general_eigenbasis_sq_norm(const EigenbasisData& data, const PhaseProfile& phases, const Rescaling& r, double t);

/// Instantaneous eigenframe of H(s(t)) with couplings from a centred
/// difference of step `eps` (neighbouring eigenvectors phase-aligned first).
MeasurementFrame instantaneous_eigenframe(HamiltonianFn hamiltonian, const Rescaling& r, double eps = 1e-5);

}  // namespace ffscale::models
