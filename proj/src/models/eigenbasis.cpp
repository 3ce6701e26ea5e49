#include "ffscale/models/eigenbasis.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ffscale::models {

namespace {

double gap_energy(const TwoLevelSchedule& sched, double s) {
  return std::hypot(sched.omega(s), sched.gamma(s));
}

}  // namespace

MeasurementFrame eigenframe_two_level(const TwoLevelSchedule& sched, const Rescaling& r) {
  auto basis = [sched, r](double t) -> ComplexMatrix {
    const double s = r.s(t);
    const double w = sched.omega(s);
    const double g = sched.gamma(s);
    if (w == 0.0 && g == 0.0) {
      throw ContractViolation("eigenframe_two_level: gap closes at t=" + std::to_string(t));
    }
    const double half = 0.5 * std::atan2(g, w);
    const double c = std::cos(half);
    const double sn = std::sin(half);
    ComplexMatrix b(2, 2);
    b << c, -sn, sn, c;
    return b;
  };
  auto coupling = [sched, r](double t) -> ComplexMatrix {
    const double rate = counterdiabatic_rate(sched, r, t);
    ComplexMatrix c(2, 2);
    c << 0.0, rate, -rate, 0.0;
    return c;
  };
  return MeasurementFrame::custom(2, {"+", "-"}, std::move(basis), std::move(coupling));
}

double counterdiabatic_rate(const TwoLevelSchedule& sched, const Rescaling& r, double t) {
  const double s = r.s(t);
  const double w = sched.omega(s);
  const double g = sched.gamma(s);
  const double e2 = w * w + g * g;
  if (e2 == 0.0) throw ContractViolation("counterdiabatic_rate: gap closes at t=" + std::to_string(t));
  return r.ds_dt(t) * (g * sched.domega(s) - w * sched.dgamma(s)) / (2.0 * e2);
}

double eigenbasis_sq_norm(const TwoLevelSchedule& sched, const Rescaling& r, const PhaseProfile& phases, double t) {
  if (phases.count() != 2) throw ContractViolation("eigenbasis_sq_norm: expected two phases");
  const double e = gap_energy(sched, r.s(t));
  const double ds = r.ds_dt(t);
  const RealVector f = phases.values(t);
  const RealVector df = phases.rates(t);
  const double a = df(0) - ds * e;
  const double b = df(1) + ds * e;
  const double theta = counterdiabatic_rate(sched, r, t);
  return a * a + b * b + 4.0 * theta * theta * (1.0 - phase_factor(f(0) - f(1)).real());
}

PhaseProfile eigenbasis_first_term_phase(const TwoLevelSchedule& sched, const Rescaling& r, const TimeGrid& grid) {
  return PhaseProfile::from_rates(
      2,
      [sched, r](double t) -> RealVector {
        const double v = r.ds_dt(t) * gap_energy(sched, r.s(t));
        return RealVector{{v, -v}};
      },
      grid);
}

void ModulationParams::validate() const {
  if (!(std::abs(delta) < 0.1)) throw ContractViolation("ModulationParams: |delta| must stay below 0.1");
  if (!(gamma0 > 0.0)) throw ContractViolation("ModulationParams: Gamma0 must be positive");
  if (!(T > 0.0) || !(T_FF > 0.0)) throw ContractViolation("ModulationParams: T and T_FF must be positive");
}

double modulation_delta(double omega0, double gamma0, double T, int k) {
  if (!(gamma0 > 0.0)) throw ContractViolation("modulation_delta: Gamma0 must be positive");
  if (!(omega0 > 0.0)) throw ContractViolation("modulation_delta: omega0 must be positive");
  if (!(T > 0.0)) throw ContractViolation("modulation_delta: T must be positive");
  const double root = std::sqrt(omega0 * omega0 + gamma0 * gamma0);
  const double bracket = omega0 * root + gamma0 * gamma0 * std::log((omega0 + root) / gamma0);
  return 4.0 * std::numbers::pi * omega0 * k / (T * bracket) - 1.0;
}

PhaseProfile modulated_phase(const ModulationParams& p) {
  p.validate();
  const double scale = (1.0 + p.delta) * p.T / p.T_FF;
  const double a = p.omega0;
  const double g = p.gamma0;
  auto field = [=](double t) { return a - 2.0 * a * t / p.T_FF; };
  // F(u) = int_0^u sqrt(v^2 + g^2) dv
  auto antiderivative = [g](double u) {
    return 0.5 * (u * std::sqrt(u * u + g * g) + g * g * std::asinh(u / g));
  };
  auto values = [=](double t) -> RealVector {
    const double integral = a == 0.0 ? g * t : p.T_FF / (2.0 * a) * (antiderivative(a) - antiderivative(field(t)));
    const double f = scale * integral;
    return RealVector{{f, -f}};
  };
  auto rates = [=](double t) -> RealVector {
    const double u = field(t);
    const double v = scale * std::sqrt(u * u + g * g);
    return RealVector{{v, -v}};
  };
  return PhaseProfile(2, values, rates);
}

EigenbasisData eigenbasis_data(HamiltonianFn hamiltonian, HamiltonianFn dh_ds) {
  auto energies = [hamiltonian](double s) -> RealVector { return eigendecompose(hamiltonian(s)).values; };
  auto elements = [hamiltonian, dh_ds](double s) -> ComplexMatrix {
    const EigenSystem es = eigendecompose(hamiltonian(s));
    return es.vectors.adjoint() * dh_ds(s).matrix() * es.vectors;
  };
  return {std::move(energies), std::move(elements)};
}

double general_eigenbasis_sq_norm(const EigenbasisData& data, const PhaseProfile& phases, const Rescaling& r,
                                  double t) {
  const double s = r.s(t);
  const double ds = r.ds_dt(t);
  const RealVector e = data.energies(s);
  const ComplexMatrix m = data.dh_elements(s);
  const Eigen::Index n = e.size();
  if (static_cast<std::size_t>(n) != phases.count() || m.rows() != n || m.cols() != n) {
    throw ContractViolation("general_eigenbasis_sq_norm: dimension mismatch");
  }
  const RealVector f = phases.values(t);
  const RealVector df = phases.rates(t);

  double first = 0.0;
  double second = 0.0;
  for (Eigen::Index a = 0; a < n; ++a) {
    const double d = df(a) - ds * e(a);
    first += d * d;
    for (Eigen::Index b = 0; b < n; ++b) {
      if (a == b) continue;
      const double gap = e(b) - e(a);
      if (std::abs(gap) <= 1e-12 * std::max(1.0, std::abs(e(a)))) {
        throw ContractViolation("general_eigenbasis_sq_norm: degenerate eigenvalues at s=" + std::to_string(s));
      }
      second += std::norm(m(a, b) / gap) * (1.0 - phase_factor(f(a) - f(b)).real());
    }
  }
  return first + 2.0 * ds * ds * second;
}

MeasurementFrame instantaneous_eigenframe(HamiltonianFn hamiltonian, const Rescaling& r, double eps) {
  if (!(eps > 0.0)) throw ContractViolation("instantaneous_eigenframe: eps must be positive");
  const std::size_t dim = hamiltonian(0.0).dim();
  auto basis = [hamiltonian, r](double t) -> ComplexMatrix { return eigendecompose(hamiltonian(r.s(t))).vectors; };
  auto coupling = [basis, eps](double t) -> ComplexMatrix {
    const ComplexMatrix v = basis(t);
    ComplexMatrix plus = basis(t + eps);
    ComplexMatrix minus = basis(t - eps);
    for (Eigen::Index c = 0; c < v.cols(); ++c) {
      for (ComplexMatrix* nb : {&plus, &minus}) {
        const Complex overlap = v.col(c).dot(nb->col(c));
        nb->col(c) *= std::conj(overlap) / std::abs(overlap);
      }
    }
    return v.adjoint() * (plus - minus) / (2.0 * eps);
  };
  return MeasurementFrame::custom(dim, {}, std::move(basis), std::move(coupling));
}

}  // namespace ffscale::models
