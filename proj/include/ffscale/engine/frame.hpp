#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ffscale/core/linalg.hpp"

namespace ffscale {

/// Complete orthonormal measurement basis {|sigma(t)>}, possibly time dependent.
///
/// `basis_at(t)` returns the basis vectors as columns in the computational
/// representation. `coupling_at(t)` returns the anti-Hermitian matrix
/// C_{sigma sigma'} = <sigma(t)| d/dt sigma'(t)>, identically zero for a
/// time-independent frame.
class MeasurementFrame {
 public:
  using MatrixFn = std::function<ComplexMatrix(double)>;

  /// Standard basis |0>, |1>, ...; labels default to "0", "1", ...
  static MeasurementFrame computational(std::size_t dim, std::vector<std::string> labels = {});

  /// A fixed orthonormal basis.
  static MeasurementFrame fixed(ComplexMatrix basis, std::vector<std::string> labels = {});

  /// |sigma(t)> = exp(-i K t) |sigma(0)>. The coupling is the constant
  /// -i B0^dagger K B0.
  static MeasurementFrame rotating(ComplexMatrix basis0, const HermitianOperator& generator,
                                   std::vector<std::string> labels = {});

  /// Caller-supplied basis and coupling.
  static MeasurementFrame custom(std::size_t dim, std::vector<std::string> labels, MatrixFn basis,
                                 MatrixFn coupling);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool time_independent() const { return static_; }
  bool is_computational() const { return computational_; }

  ComplexMatrix basis_at(double t) const { return basis_(t); }
  ComplexMatrix coupling_at(double t) const;

  /// Throws ContractViolation if the basis at t is not orthonormal within tol.
  void check_orthonormal(double t, double tol = 1e-10) const;
  /// Throws ContractViolation if C(t) + C(t)^dagger exceeds tol element-wise.
  void check_anti_hermitian(double t, double tol = 1e-8) const;

 private:
  MeasurementFrame() = default;

  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  MatrixFn basis_;
  MatrixFn coupling_;
  bool static_ = false;
  bool computational_ = false;
};

}  // namespace ffscale
