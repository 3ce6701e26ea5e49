#include "ffscale/core/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ffscale {

namespace {

ComplexVector rhs(const HamiltonianFn& h, double t, const ComplexVector& psi) {
  const HermitianOperator op = h(t);
  if (static_cast<Eigen::Index>(op.dim()) != psi.size()) {
    throw ContractViolation("evolve: Hamiltonian dimension " + std::to_string(op.dim()) +
                            " does not match state dimension " + std::to_string(psi.size()));
  }
  return -kI * (op.matrix() * psi);
}

}  // namespace

Trajectory evolve(const HamiltonianFn& hamiltonian, const StateVector& initial, const TimeGrid& grid,
                  const EvolveOptions& options) {
  if (std::abs(initial.squared_norm() - 1.0) > 1e-9) {
    throw ContractViolation("evolve: initial state is not normalized");
  }
  Trajectory out;
  out.states.reserve(grid.n_points());
  out.states.push_back(initial);

  const double h = grid.spacing();
  const double n0 = initial.squared_norm();
  ComplexVector psi = initial.amplitudes();
  for (std::size_t k = 0; k < grid.n_steps(); ++k) {
    const double t = grid.at(k);
    const ComplexVector k1 = rhs(hamiltonian, t, psi);
    const ComplexVector k2 = rhs(hamiltonian, t + 0.5 * h, psi + 0.5 * h * k1);
    const ComplexVector k3 = rhs(hamiltonian, t + 0.5 * h, psi + 0.5 * h * k2);
    const ComplexVector k4 = rhs(hamiltonian, t + h, psi + h * k3);
    psi += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    out.norm_drift = std::max(out.norm_drift, std::abs(psi.squaredNorm() - n0));
    out.states.emplace_back(psi);
  }
  if (out.norm_drift > options.max_norm_drift) {
    throw NumericalError("evolve: norm drift " + std::to_string(out.norm_drift) + " exceeds " +
                         std::to_string(options.max_norm_drift) + "; refine the grid");
  }
  return out;
}

}  // namespace ffscale
