// Fast-forward Hamiltonians and their squared Hilbert-Schmidt norms.
//
// Given an original Hamiltonian H(s), a rescaling s(t), a measurement frame
// {|sigma(t)>} and phases f_sigma(t), the fast-forward Hamiltonian
//
//   H_FF(t) = (ds/dt) U_f H(s) U_f^dagger + i (d/dt U_f) U_f^dagger,
//   U_f(t)  = sum_sigma exp(i f_sigma(t)) |sigma(t)><sigma(t)|,
//
// drives |Psi_FF(t)> = U_f(t)|Psi(s(t))>, which has the same outcome
// probabilities in the frame as the original state at s(t).

#pragma once

#include "ffscale/core/linalg.hpp"
#include "ffscale/engine/frame.hpp"
#include "ffscale/engine/phase.hpp"
#include "ffscale/engine/rescaling.hpp"

namespace ffscale {

/// t -> (ds/dt) H(s(t)).
HamiltonianFn simplest_ff(HamiltonianFn hamiltonian, const Rescaling& r);

/// sum_sigma exp(i f_sigma(t)) |sigma(t)><sigma(t)|.
ComplexMatrix unitary_f(const MeasurementFrame& frame, const PhaseProfile& phases, double t);

/// Element-wise construction in the frame basis:
///   diagonal      (ds/dt)<s|H|s> - df_s/dt
///   off-diagonal  (ds/dt) e^{i(f_s - f_s')} <s|H|s'> + i (1 - e^{i(f_s - f_s')}) <s|d_t s'>
/// mapped back to the computational representation.
HermitianOperator build_ff_hamiltonian(const HamiltonianFn& hamiltonian, const Rescaling& r,
                                       const MeasurementFrame& frame, const PhaseProfile& phases, double t);

/// Hamiltonian-valued function t -> build_ff_hamiltonian(..., t).
HamiltonianFn ff_hamiltonian_fn(HamiltonianFn hamiltonian, Rescaling r, MeasurementFrame frame, PhaseProfile phases);

/// ||H_FF(t)||^2 from the frame-basis sum
///   sum_s (df_s/dt - (ds/dt)<s|H|s>)^2
///   + sum_{s != s'} | i (1 - e^{-i(f_s - f_s')}) <s|d_t s'> - (ds/dt)<s|H|s'> |^2
/// without assembling H_FF.
double squared_ff_norm(const HamiltonianFn& hamiltonian, const Rescaling& r, const MeasurementFrame& frame,
                       const PhaseProfile& phases, double t);

/// Phases with df_s/dt = (ds/dt)<s|H(s)|s>, which minimise the squared norm
/// for a time-independent frame. Rejects time-dependent frames.
PhaseProfile optimal_phase(HamiltonianFn hamiltonian, const Rescaling& r, const MeasurementFrame& frame,
                           const TimeGrid& grid);

/// (ds/dt)^2 sum_s (<s|H^2|s> - <s|H|s>^2): the minimised squared norm.
double variance_norm(const HermitianOperator& h, const ComplexMatrix& basis, double ds_dt);

}  // namespace ffscale
