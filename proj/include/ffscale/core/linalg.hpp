// Dense complex linear algebra for small quantum systems.
//
// All quantities are dimensionless: times in units of the fast-forward
// duration, energies in its inverse, hbar = 1.

#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ffscale {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

/// Largest Hilbert-space dimension accepted by the dense routines (12 qubits).
inline constexpr std::size_t kMaxDim = 4096;

/// Thrown when a caller breaks an operation's precondition.
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a numerical result misses its accuracy target.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Square complex matrix equal to its conjugate transpose.
///
/// Construction rejects non-square input and input whose anti-Hermitian part
/// exceeds `tol * max(1, max|a_ij|)` element-wise; the stored matrix is the
/// Hermitian part, so downstream arithmetic sees an exactly Hermitian value.
class HermitianOperator {
 public:
  static constexpr double kDefaultTolerance = 1e-12;

  HermitianOperator() = default;
  explicit HermitianOperator(ComplexMatrix m, double tol = kDefaultTolerance);

  static HermitianOperator zero(std::size_t dim);
  static HermitianOperator identity(std::size_t dim);
  static HermitianOperator diagonal(const RealVector& d);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const ComplexMatrix& matrix() const { return m_; }
  Complex operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  HermitianOperator& operator+=(const HermitianOperator& o);
  HermitianOperator& operator-=(const HermitianOperator& o);
  HermitianOperator& operator*=(double a);

  friend HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b) { return a += b; }
  friend HermitianOperator operator-(HermitianOperator a, const HermitianOperator& b) { return a -= b; }
  friend HermitianOperator operator*(double s, HermitianOperator a) { return a *= s; }
  friend HermitianOperator operator*(HermitianOperator a, double s) { return a *= s; }

  /// U H U^dagger; U must be unitary (not checked).
  HermitianOperator conjugated_by(const ComplexMatrix& u) const;

 private:
  struct Trusted {};
  HermitianOperator(ComplexMatrix m, Trusted) : m_(std::move(m)) {}

  ComplexMatrix m_;
};

using HamiltonianFn = std::function<HermitianOperator(double)>;

/// Pure state amplitudes in the computational representation.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(ComplexVector amplitudes);

  static StateVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return static_cast<std::size_t>(a_.size()); }
  const ComplexVector& amplitudes() const { return a_; }
  Complex operator[](Eigen::Index i) const { return a_(i); }
  double squared_norm() const { return a_.squaredNorm(); }

 private:
  ComplexVector a_;
};

/// Uniform grid t_k = t_start + k (t_end - t_start) / n_steps, k = 0..n_steps.
class TimeGrid {
 public:
  TimeGrid(double t_start, double t_end, std::size_t n_steps);

  double t_start() const { return t0_; }
  double t_end() const { return t1_; }
  std::size_t n_steps() const { return n_; }
  std::size_t n_points() const { return n_ + 1; }
  double spacing() const { return (t1_ - t0_) / static_cast<double>(n_); }
  double at(std::size_t k) const;

  /// Same interval with twice the step count.
  TimeGrid refined() const { return TimeGrid(t0_, t1_, 2 * n_); }

 private:
  double t0_;
  double t1_;
  std::size_t n_;
};

// Pauli matrices in the Z eigenbasis, |+1> = (1, 0).
HermitianOperator pauli_x();
HermitianOperator pauli_y();
HermitianOperator pauli_z();

/// Embeds a single-qubit operator at `site` of an `n_sites` register; site 0 is
/// the leftmost (most significant) tensor factor.
HermitianOperator embed_site(const HermitianOperator& op, std::size_t site, std::size_t n_sites);

/// Hilbert-Schmidt norm sqrt(Tr H^2).
double hs_norm(const HermitianOperator& op);

struct EigenSystem {
  RealVector values;     // ascending
  ComplexMatrix vectors; // orthonormal columns
};

/// Eigenvalues ascending; each eigenvector scaled so that its largest-modulus
/// component (first one on ties) is real and positive.
EigenSystem eigendecompose(const HermitianOperator& op);

/// |<b_k|psi>|^2 for every column b_k of an orthonormal basis.
RealVector measurement_probabilities(const StateVector& state, const ComplexMatrix& basis);

/// max |B^dagger B - 1| element-wise.
double orthonormality_defect(const ComplexMatrix& basis);

/// e^{i x} with x reduced to [-pi, pi] first.
Complex phase_factor(double x);

}  // namespace ffscale
