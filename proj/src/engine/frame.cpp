#include "ffscale/engine/frame.hpp"

#include <cmath>

namespace ffscale {

namespace {

std::vector<std::string> default_labels(std::size_t dim, std::vector<std::string> labels) {
  if (labels.empty()) {
    for (std::size_t i = 0; i < dim; ++i) labels.push_back(std::to_string(i));
  }
  if (labels.size() != dim) throw ContractViolation("MeasurementFrame: label count does not match dimension");
  return labels;
}

void require_square_basis(const ComplexMatrix& b) {
  if (b.rows() == 0 || b.rows() != b.cols()) throw ContractViolation("MeasurementFrame: basis must be square");
  if (static_cast<std::size_t>(b.rows()) > kMaxDim) throw ContractViolation("MeasurementFrame: dimension over cap");
  if (orthonormality_defect(b) > 1e-10) throw ContractViolation("MeasurementFrame: basis not orthonormal");
}

}  // namespace

MeasurementFrame MeasurementFrame::computational(std::size_t dim, std::vector<std::string> labels) {
  if (dim == 0 || dim > kMaxDim) throw ContractViolation("MeasurementFrame: invalid dimension");
  MeasurementFrame f;
  f.dim_ = dim;
  f.labels_ = default_labels(dim, std::move(labels));
  const auto n = static_cast<Eigen::Index>(dim);
  f.basis_ = [n](double) -> ComplexMatrix { return ComplexMatrix::Identity(n, n); };
  f.static_ = true;
  f.computational_ = true;
  return f;
}

MeasurementFrame MeasurementFrame::fixed(ComplexMatrix basis, std::vector<std::string> labels) {
  require_square_basis(basis);
  MeasurementFrame f;
  f.dim_ = static_cast<std::size_t>(basis.rows());
  f.labels_ = default_labels(f.dim_, std::move(labels));
  f.basis_ = [b = std::move(basis)](double) { return b; };
  f.static_ = true;
  return f;
}

MeasurementFrame MeasurementFrame::rotating(ComplexMatrix basis0, const HermitianOperator& generator,
                                            std::vector<std::string> labels) {
  require_square_basis(basis0);
  if (generator.dim() != static_cast<std::size_t>(basis0.rows())) {
    throw ContractViolation("MeasurementFrame::rotating: generator dimension mismatch");
  }
  MeasurementFrame f;
  f.dim_ = generator.dim();
  f.labels_ = default_labels(f.dim_, std::move(labels));
  const EigenSystem es = eigendecompose(generator);
  f.basis_ = [es, basis0](double t) -> ComplexMatrix {
    ComplexVector phases(es.values.size());
    for (Eigen::Index i = 0; i < es.values.size(); ++i) phases(i) = phase_factor(-es.values(i) * t);
    return es.vectors * phases.asDiagonal() * es.vectors.adjoint() * basis0;
  };
  const ComplexMatrix c = -kI * (basis0.adjoint() * generator.matrix() * basis0);
  f.coupling_ = [c](double) { return c; };
  return f;
}

MeasurementFrame MeasurementFrame::custom(std::size_t dim, std::vector<std::string> labels, MatrixFn basis,
                                          MatrixFn coupling) {
  if (dim == 0 || dim > kMaxDim) throw ContractViolation("MeasurementFrame: invalid dimension");
  if (!basis || !coupling) throw ContractViolation("MeasurementFrame::custom: basis and coupling must be callable");
  MeasurementFrame f;
  f.dim_ = dim;
  f.labels_ = default_labels(dim, std::move(labels));
  f.basis_ = std::move(basis);
  f.coupling_ = std::move(coupling);
  return f;
}

ComplexMatrix MeasurementFrame::coupling_at(double t) const {
  if (static_) {
    const auto n = static_cast<Eigen::Index>(dim_);
    return ComplexMatrix::Zero(n, n);
  }
  return coupling_(t);
}

void MeasurementFrame::check_orthonormal(double t, double tol) const {
  if (computational_) return;
  const ComplexMatrix b = basis_at(t);
  if (b.rows() != static_cast<Eigen::Index>(dim_) || b.cols() != b.rows()) {
    throw ContractViolation("MeasurementFrame: basis has wrong shape at t=" + std::to_string(t));
  }
  const double defect = orthonormality_defect(b);
  if (defect > tol) {
    throw ContractViolation("MeasurementFrame: basis not orthonormal at t=" + std::to_string(t) + " (defect " +
                            std::to_string(defect) + ")");
  }
}

void MeasurementFrame::check_anti_hermitian(double t, double tol) const {
  const ComplexMatrix c = coupling_at(t);
  const double defect = (c + c.adjoint()).cwiseAbs().maxCoeff();
  if (defect > tol) {
    throw ContractViolation("MeasurementFrame: coupling not anti-Hermitian at t=" + std::to_string(t));
  }
}

}  // namespace ffscale
