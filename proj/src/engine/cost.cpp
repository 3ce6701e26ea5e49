#include "ffscale/engine/cost.hpp"

#include <algorithm>
#include <cmath>

#include "ffscale/core/evolve.hpp"
#include "ffscale/core/quadrature.hpp"
#include "ffscale/engine/fast_forward.hpp"

namespace ffscale {

std::optional<double> instantaneous_cost(double ff_norm, double original_norm) {
  if (!(ff_norm >= 0.0) || !(original_norm >= 0.0)) {
    throw ContractViolation("instantaneous_cost: norms must be nonnegative");
  }
  if (original_norm == 0.0) return std::nullopt;
  return ff_norm / original_norm;
}

double total_cost(std::span<const double> ff_norms, const TimeGrid& ff_grid, std::span<const double> original_norms,
                  const TimeGrid& original_grid) {
  if (ff_norms.size() != ff_grid.n_points() || original_norms.size() != original_grid.n_points()) {
    throw ContractViolation("total_cost: sample count does not match grid");
  }
  const double denom = simpson(original_norms, original_grid.spacing());
  if (!(denom > 0.0)) throw ContractViolation("total_cost: original Hamiltonian has zero integrated norm");
  return simpson(ff_norms, ff_grid.spacing()) / denom;
}

CostReport evaluate_costs(const NormFn& ff_norm, const NormFn& original_norm, const Rescaling& r, std::size_t steps) {
  CostReport rep{TimeGrid(0.0, r.T_FF(), steps), {}, {}, {}, {}};
  const TimeGrid orig_grid(0.0, r.T(), steps);
  const std::size_t n = rep.grid.n_points();
  rep.ff_norm.resize(n);
  rep.original_norm.resize(n);
  rep.delta_C.resize(n);
  rep.delta_C_std.resize(n);

  std::vector<double> std_norm(n);
  std::vector<double> orig_samples(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = rep.grid.at(k);
    const double ds = r.ds_dt(t);
    rep.ff_norm[k] = ff_norm(t);
    rep.original_norm[k] = original_norm(r.s(t));
    rep.delta_C[k] = instantaneous_cost(rep.ff_norm[k], rep.original_norm[k]);
    rep.delta_C_std[k] = std::abs(ds);
    std_norm[k] = std::abs(ds) * rep.original_norm[k];
    orig_samples[k] = original_norm(orig_grid.at(k));
  }
  rep.ff_integral = simpson(rep.ff_norm, rep.grid.spacing());
  rep.original_integral = simpson(orig_samples, orig_grid.spacing());
  rep.C = total_cost(rep.ff_norm, rep.grid, orig_samples, orig_grid);
  rep.C_std = total_cost(std_norm, rep.grid, orig_samples, orig_grid);
  return rep;
}

CostReport evaluate_costs(const HamiltonianFn& hamiltonian, const Rescaling& r, const MeasurementFrame& frame,
                          const PhaseProfile& phases, std::size_t steps) {
  return evaluate_costs([&](double t) { return std::sqrt(squared_ff_norm(hamiltonian, r, frame, phases, t)); },
                        [&](double s) { return hs_norm(hamiltonian(s)); }, r, steps);
}

double verify_probability_invariance(const HamiltonianFn& hamiltonian, const Rescaling& r,
                                     const MeasurementFrame& frame, const PhaseProfile& phases,
                                     const StateVector& psi0, const TimeGrid& grid) {
  if (grid.t_start() != 0.0 || std::abs(grid.t_end() - r.T_FF()) > 1e-12 * r.T_FF()) {
    throw ContractViolation("verify_probability_invariance: grid must span [0, T_FF]");
  }
  const Trajectory original = evolve(simplest_ff(hamiltonian, r), psi0, grid);
  const Trajectory fast = evolve(ff_hamiltonian_fn(hamiltonian, r, frame, phases), psi0, grid);

  double worst = 0.0;
  for (std::size_t k = 0; k < grid.n_points(); ++k) {
    const ComplexMatrix basis = frame.basis_at(grid.at(k));
    const RealVector p = measurement_probabilities(original.states[k], basis);
    const RealVector q = measurement_probabilities(fast.states[k], basis);
    worst = std::max(worst, (p - q).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace ffscale
