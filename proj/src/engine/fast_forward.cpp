#include "ffscale/engine/fast_forward.hpp"

#include <cmath>
#include <string>

namespace ffscale {

namespace {

struct FrameSnapshot {
  ComplexMatrix basis;
  ComplexMatrix h_frame;  // <s|H(s(t))|s'>
  ComplexMatrix coupling;
  RealVector f;
  RealVector df;
  double ds_dt;
};

FrameSnapshot snapshot(const HamiltonianFn& hamiltonian, const Rescaling& r, const MeasurementFrame& frame,
                       const PhaseProfile& phases, double t) {
  if (phases.count() != frame.dim()) {
    throw ContractViolation("fast-forward: frame has " + std::to_string(frame.dim()) + " labels but phase profile has " +
                            std::to_string(phases.count()));
  }
  const HermitianOperator h = hamiltonian(r.s(t));
  if (h.dim() != frame.dim()) throw ContractViolation("fast-forward: Hamiltonian and frame dimensions differ");

  FrameSnapshot snap;
  snap.ds_dt = r.ds_dt(t);
  snap.f = phases.values(t);
  snap.df = phases.rates(t);
  if (frame.is_computational()) {
    snap.h_frame = h.matrix();
  } else {
    frame.check_orthonormal(t);
    snap.basis = frame.basis_at(t);
    snap.h_frame = snap.basis.adjoint() * h.matrix() * snap.basis;
  }
  if (!frame.time_independent()) snap.coupling = frame.coupling_at(t);
  return snap;
}

}  // namespace

HamiltonianFn simplest_ff(HamiltonianFn hamiltonian, const Rescaling& r) {
  return [h = std::move(hamiltonian), r](double t) { return r.ds_dt(t) * h(r.s(t)); };
}

ComplexMatrix unitary_f(const MeasurementFrame& frame, const PhaseProfile& phases, double t) {
  if (phases.count() != frame.dim()) throw ContractViolation("unitary_f: label count mismatch");
  const RealVector f = phases.values(t);
  ComplexVector d(f.size());
  for (Eigen::Index i = 0; i < f.size(); ++i) d(i) = phase_factor(f(i));
  if (frame.is_computational()) return d.asDiagonal().toDenseMatrix();
  const ComplexMatrix b = frame.basis_at(t);
  return b * d.asDiagonal() * b.adjoint();
}

HermitianOperator build_ff_hamiltonian(const HamiltonianFn& hamiltonian, const Rescaling& r,
                                       const MeasurementFrame& frame, const PhaseProfile& phases, double t) {
  const FrameSnapshot snap = snapshot(hamiltonian, r, frame, phases, t);
  const Eigen::Index n = snap.h_frame.rows();
  const bool moving = snap.coupling.size() != 0;

  ComplexMatrix m(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    m(a, a) = snap.ds_dt * snap.h_frame(a, a).real() - snap.df(a);
    for (Eigen::Index b = a + 1; b < n; ++b) {
      const Complex e = phase_factor(snap.f(a) - snap.f(b));
      Complex v = snap.ds_dt * e * snap.h_frame(a, b);
      if (moving) v += kI * (1.0 - e) * snap.coupling(a, b);
      m(a, b) = v;
      m(b, a) = std::conj(v);
    }
  }
  if (frame.is_computational()) return HermitianOperator(std::move(m));
  // m is exactly Hermitian; the basis change only adds rounding.
  return HermitianOperator(snap.basis * m * snap.basis.adjoint(), 1e-10);
}

HamiltonianFn ff_hamiltonian_fn(HamiltonianFn hamiltonian, Rescaling r, MeasurementFrame frame, PhaseProfile phases) {
  return [h = std::move(hamiltonian), r = std::move(r), frame = std::move(frame),
          phases = std::move(phases)](double t) { return build_ff_hamiltonian(h, r, frame, phases, t); };
}

double squared_ff_norm(const HamiltonianFn& hamiltonian, const Rescaling& r, const MeasurementFrame& frame,
                       const PhaseProfile& phases, double t) {
  const FrameSnapshot snap = snapshot(hamiltonian, r, frame, phases, t);
  const Eigen::Index n = snap.h_frame.rows();
  const bool moving = snap.coupling.size() != 0;

  double diag = 0.0;
  double off = 0.0;
  for (Eigen::Index a = 0; a < n; ++a) {
    const double d = snap.df(a) - snap.ds_dt * snap.h_frame(a, a).real();
    diag += d * d;
    for (Eigen::Index b = 0; b < n; ++b) {
      if (a == b) continue;
      Complex v = -snap.ds_dt * snap.h_frame(a, b);
      if (moving) v += kI * (1.0 - phase_factor(-(snap.f(a) - snap.f(b)))) * snap.coupling(a, b);
      off += std::norm(v);
    }
  }
  return diag + off;
}

PhaseProfile optimal_phase(HamiltonianFn hamiltonian, const Rescaling& r, const MeasurementFrame& frame,
                           const TimeGrid& grid) {
  if (!frame.time_independent()) {
    throw ContractViolation("optimal_phase: frame depends on time; the diagonal rule is only optimal for fixed frames");
  }
  const bool computational = frame.is_computational();
  const ComplexMatrix basis = frame.basis_at(0.0);
  auto rates = [h = std::move(hamiltonian), r, basis, computational](double t) -> RealVector {
    const HermitianOperator op = h(r.s(t));
    RealVector d = computational ? RealVector(op.matrix().diagonal().real())
                                 : RealVector((basis.adjoint() * op.matrix() * basis).diagonal().real());
    return r.ds_dt(t) * d;
  };
  return PhaseProfile::from_rates(frame.dim(), std::move(rates), grid);
}

double variance_norm(const HermitianOperator& h, const ComplexMatrix& basis, double ds_dt) {
  if (basis.rows() != static_cast<Eigen::Index>(h.dim()) || basis.cols() != basis.rows()) {
    throw ContractViolation("variance_norm: dimension mismatch");
  }
  const ComplexMatrix hb = h.matrix() * basis;
  double sum = 0.0;
  for (Eigen::Index s = 0; s < basis.cols(); ++s) {
    const double second = hb.col(s).squaredNorm();
    const double first = basis.col(s).dot(hb.col(s)).real();
    sum += second - first * first;
  }
  return ds_dt * ds_dt * sum;
}

}  // namespace ffscale
