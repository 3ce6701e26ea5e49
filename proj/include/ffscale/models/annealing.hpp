// Quantum annealing of an Ising spin glass,
//   H(t) = lambda(t) H_P + (1 - lambda(t)) V,
//   H_P = -sum_{i<j} J_ij Z_i Z_j - sum_i h_i Z_i,  V = -Gamma sum_i X_i,
// measured in the computational basis.
//
// Qubit i is tensor factor i counted from the left; sigma_i = +1 is bit 0.

#pragma once

#include <cstdint>
#include <functional>

#include "ffscale/core/linalg.hpp"
#include "ffscale/engine/frame.hpp"
#include "ffscale/engine/phase.hpp"
#include "ffscale/engine/rescaling.hpp"

namespace ffscale::models {

inline constexpr std::size_t kMaxSpins = 12;

class IsingInstance {
 public:
  using Fn = std::function<double(double)>;

  /// `lambda` must satisfy lambda(0) = 0 and lambda(T) = 1. `lambda_integral`
  /// is s -> int_0^s lambda; when empty it is tabulated by quadrature.
  IsingInstance(Eigen::MatrixXd J, RealVector h, double gamma, double T, Fn lambda, Fn lambda_integral = {});

  /// Couplings J_ij (i < j) and fields h_i uniform in [-1, 1] from a
  /// mt19937_64 stream seeded with `seed`; linear schedule lambda(s) = s/T.
  static IsingInstance random(std::size_t n_spins, std::uint64_t seed, double gamma, double T);

  std::size_t n_spins() const { return static_cast<std::size_t>(h_.size()); }
  std::size_t dim() const { return std::size_t{1} << n_spins(); }
  const Eigen::MatrixXd& J() const { return J_; }
  const RealVector& h() const { return h_; }
  double gamma() const { return gamma_; }
  double T() const { return T_; }
  double lambda(double s) const { return lambda_(s); }
  double lambda_integral(double s) const { return lambda_int_(s); }

  double sum_J_squared() const;  // sum_{i<j} J_ij^2
  double sum_h_squared() const;

  /// sigma_i = +1 when bit (n-1-i) of `config` is 0.
  int spin(std::size_t config, std::size_t site) const;
  /// sum_i h_i sigma_i
  double field_overlap(std::size_t config) const;
  /// -sum_{i<j} J_ij sigma_i sigma_j - sum_i h_i sigma_i
  double problem_energy(std::size_t config) const;

 private:
  Eigen::MatrixXd J_;
  RealVector h_;
  double gamma_;
  double T_;
  Fn lambda_;
  Fn lambda_int_;
};

HermitianOperator qa_hamiltonian(const IsingInstance& inst, double t);
HamiltonianFn qa_hamiltonian_fn(IsingInstance inst);

/// 2^N [lambda^2 (sum J^2 + sum h^2) + N (1 - lambda)^2 Gamma^2], no matrix built.
double qa_hs_norm_sq(const IsingInstance& inst, double t);

/// ||H_FF||^2 under the field-cancelling phases:
/// 2^N (ds/dt)^2 [lambda^2 sum J^2 + N (1 - lambda)^2 Gamma^2] at s(t).
double qa_suboptimal_ff_norm_sq(const IsingInstance& inst, const Rescaling& r, double t);

/// sqrt of the ratio of the two closed forms above, times |ds/dt|.
double qa_suboptimal_cost(const IsingInstance& inst, const Rescaling& r, double t);

/// Computational basis with labels such as "+-+".
MeasurementFrame computational_frame(std::size_t n_spins);

/// f_sigma(t) = -(sum_i h_i sigma_i) int_0^{s(t)} lambda, which cancels the
/// longitudinal-field part of the diagonal.
PhaseProfile qa_suboptimal_phase(const IsingInstance& inst, const Rescaling& r);

/// -(ds/dt) lambda sum_{i<j} J_ij Z_i Z_j
/// - (ds/dt)(1 - lambda) Gamma sum_i [cos(phi_i) X_i + sin(phi_i) Y_i],
/// phi_i = 2 h_i int_0^s lambda.
HermitianOperator qa_suboptimal_ff(const IsingInstance& inst, const Rescaling& r, double t);

}  // namespace ffscale::models
