#include "ffscale/core/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ffscale {

namespace {

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace

HermitianOperator::HermitianOperator(ComplexMatrix m, double tol) {
  if (m.rows() != m.cols()) {
    throw ContractViolation("HermitianOperator: matrix is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", not square");
  }
  if (m.rows() == 0) throw ContractViolation("HermitianOperator: empty matrix");
  const ComplexMatrix adj = m.adjoint();
  const double defect = max_abs(m - adj);
  const double scale = std::max(1.0, max_abs(m));
  if (!(defect <= tol * scale)) {
    throw ContractViolation("HermitianOperator: matrix not Hermitian (defect " + std::to_string(defect) + ")");
  }
  m_ = 0.5 * (m + adj);
}

HermitianOperator HermitianOperator::zero(std::size_t dim) {
  return HermitianOperator(ComplexMatrix::Zero(dim, dim), Trusted{});
}

HermitianOperator HermitianOperator::identity(std::size_t dim) {
  return HermitianOperator(ComplexMatrix::Identity(dim, dim), Trusted{});
}

HermitianOperator HermitianOperator::diagonal(const RealVector& d) {
  return HermitianOperator(d.cast<Complex>().asDiagonal().toDenseMatrix(), Trusted{});
}

HermitianOperator& HermitianOperator::operator+=(const HermitianOperator& o) {
  if (o.dim() != dim()) throw ContractViolation("HermitianOperator: dimension mismatch in +");
  m_ += o.m_;
  return *this;
}

HermitianOperator& HermitianOperator::operator-=(const HermitianOperator& o) {
  if (o.dim() != dim()) throw ContractViolation("HermitianOperator: dimension mismatch in -");
  m_ -= o.m_;
  return *this;
}

HermitianOperator& HermitianOperator::operator*=(double a) {
  m_ *= a;
  return *this;
}

HermitianOperator HermitianOperator::conjugated_by(const ComplexMatrix& u) const {
  if (u.rows() != m_.rows() || u.cols() != m_.cols()) {
    throw ContractViolation("conjugated_by: dimension mismatch");
  }
  ComplexMatrix r = u * m_ * u.adjoint();
  return HermitianOperator(0.5 * (r + r.adjoint()), Trusted{});
}

StateVector::StateVector(ComplexVector amplitudes) : a_(std::move(amplitudes)) {
  if (a_.size() == 0) throw ContractViolation("StateVector: empty amplitude vector");
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw ContractViolation("StateVector::basis: index out of range");
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return StateVector(std::move(v));
}

TimeGrid::TimeGrid(double t_start, double t_end, std::size_t n_steps)
    : t0_(t_start), t1_(t_end), n_(n_steps) {
  if (n_steps == 0) throw ContractViolation("TimeGrid: n_steps must be positive");
  if (!(t_end > t_start)) throw ContractViolation("TimeGrid: t_end must exceed t_start");
  if (!(spacing() > 0.0)) throw ContractViolation("TimeGrid: spacing underflows");
}

double TimeGrid::at(std::size_t k) const {
  if (k == n_) return t1_;
  return t0_ + static_cast<double>(k) * spacing();
}

HermitianOperator pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return HermitianOperator(m);
}

HermitianOperator pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0, -kI, kI, 0;
  return HermitianOperator(m);
}

HermitianOperator pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return HermitianOperator(m);
}

HermitianOperator embed_site(const HermitianOperator& op, std::size_t site, std::size_t n_sites) {
  if (op.dim() != 2) throw ContractViolation("embed_site: expected a single-qubit operator");
  if (site >= n_sites) throw ContractViolation("embed_site: site out of range");
  if (n_sites > 12) throw ContractViolation("embed_site: more than 12 sites");
  const std::size_t dim = std::size_t{1} << n_sites;
  const std::size_t shift = n_sites - 1 - site;
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const std::size_t bit = (col >> shift) & 1u;
    for (std::size_t out = 0; out < 2; ++out) {
      const Complex a = op(out, bit);
      if (a == Complex{}) continue;
      const std::size_t row = (col & ~(std::size_t{1} << shift)) | (out << shift);
      m(row, col) += a;
    }
  }
  return HermitianOperator(std::move(m));
}

double hs_norm(const HermitianOperator& op) { return op.matrix().norm(); }

EigenSystem eigendecompose(const HermitianOperator& op) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(op.matrix());
  if (solver.info() != Eigen::Success) throw NumericalError("eigendecompose: solver did not converge");
  EigenSystem es{solver.eigenvalues(), solver.eigenvectors()};
  for (Eigen::Index c = 0; c < es.vectors.cols(); ++c) {
    auto col = es.vectors.col(c);
    const double top = col.cwiseAbs().maxCoeff();
    Eigen::Index pivot = 0;
    while (std::abs(col(pivot)) < top * (1.0 - 1e-10)) ++pivot;
    col *= std::conj(col(pivot)) / std::abs(col(pivot));
    col(pivot) = std::abs(col(pivot));
  }
  return es;
}

RealVector measurement_probabilities(const StateVector& state, const ComplexMatrix& basis) {
  if (basis.rows() != static_cast<Eigen::Index>(state.dim()) || basis.cols() != basis.rows()) {
    throw ContractViolation("measurement_probabilities: dimension mismatch");
  }
  if (std::abs(state.squared_norm() - 1.0) > 1e-8) {
    throw ContractViolation("measurement_probabilities: state is not normalized");
  }
  return (basis.adjoint() * state.amplitudes()).cwiseAbs2();
}

double orthonormality_defect(const ComplexMatrix& basis) {
  const ComplexMatrix g = basis.adjoint() * basis - ComplexMatrix::Identity(basis.cols(), basis.cols());
  return max_abs(g);
}

Complex phase_factor(double x) {
  const double r = std::remainder(x, 2.0 * std::numbers::pi);
  return {std::cos(r), std::sin(r)};
}

}  // namespace ffscale
