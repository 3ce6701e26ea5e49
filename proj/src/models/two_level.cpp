#include "ffscale/models/two_level.hpp"

#include <cmath>

namespace ffscale::models {

TwoLevelSchedule TwoLevelSchedule::magnetization_reversal(double omega0, double gamma0, double T) {
  if (!(T > 0.0)) throw ContractViolation("magnetization_reversal: T must be positive");
  const double slope = -2.0 * omega0 / T;
  return {[=](double s) { return omega0 + slope * s; }, [=](double) { return gamma0; },
          [=](double) { return slope; }, [](double) { return 0.0; }};
}

TwoLevelSchedule TwoLevelSchedule::constant(double omega, double gamma) {
  return {[=](double) { return omega; }, [=](double) { return gamma; }, [](double) { return 0.0; },
          [](double) { return 0.0; }};
}

HermitianOperator two_level_hamiltonian(const TwoLevelSchedule& sched, double t) {
  const double w = sched.omega(t);
  const double g = sched.gamma(t);
  ComplexMatrix m(2, 2);
  m << w, g, g, -w;
  return HermitianOperator(std::move(m));
}

HamiltonianFn two_level_hamiltonian_fn(TwoLevelSchedule sched) {
  return [sched = std::move(sched)](double t) { return two_level_hamiltonian(sched, t); };
}

MeasurementFrame pauli_z_frame() { return MeasurementFrame::computational(2, {"+", "-"}); }

PhaseProfile two_level_optimal_phase(const TwoLevelSchedule& sched, const Rescaling& r, const TimeGrid& grid) {
  return PhaseProfile::from_rates(
      2,
      [sched, r](double t) -> RealVector {
        const double v = r.ds_dt(t) * sched.omega(r.s(t));
        return RealVector{{v, -v}};
      },
      grid);
}

HermitianOperator two_level_optimal_ff(const TwoLevelSchedule& sched, const Rescaling& r, const PhaseProfile& phases,
                                       double t) {
  if (phases.count() != 2) throw ContractViolation("two_level_optimal_ff: expected two phases");
  const RealVector f = phases.values(t);
  const Complex e = phase_factor(f(0) - f(1));
  const double amp = r.ds_dt(t) * sched.gamma(r.s(t));
  // cos(d) X - sin(d) Y has (+,-) element e^{i d}.
  ComplexMatrix m(2, 2);
  m << 0.0, amp * e, amp * std::conj(e), 0.0;
  return HermitianOperator(std::move(m));
}

double two_level_optimal_cost(const TwoLevelSchedule& sched, const Rescaling& r, double t) {
  const double s = r.s(t);
  const double w = sched.omega(s);
  const double g = sched.gamma(s);
  return std::abs(r.ds_dt(t)) * std::sqrt(g * g / (w * w + g * g));
}

}  // namespace ffscale::models
