#include "ffscale/models/annealing.hpp"

#include <cmath>
#include <memory>
#include <random>
#include <string>

#include "ffscale/core/quadrature.hpp"

namespace ffscale::models {

IsingInstance::IsingInstance(Eigen::MatrixXd J, RealVector h, double gamma, double T, Fn lambda, Fn lambda_integral)
    : J_(std::move(J)), h_(std::move(h)), gamma_(gamma), T_(T), lambda_(std::move(lambda)),
      lambda_int_(std::move(lambda_integral)) {
  const auto n = h_.size();
  if (n == 0) throw ContractViolation("IsingInstance: need at least one spin");
  if (static_cast<std::size_t>(n) > kMaxSpins) {
    throw ContractViolation("IsingInstance: " + std::to_string(n) + " spins exceeds the dense cap of " +
                            std::to_string(kMaxSpins));
  }
  if (J_.rows() != n || J_.cols() != n) throw ContractViolation("IsingInstance: J must be N x N");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (J_(i, i) != 0.0) throw ContractViolation("IsingInstance: J must have zero diagonal");
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (J_(i, j) != J_(j, i)) throw ContractViolation("IsingInstance: J must be symmetric");
    }
  }
  if (!(T_ > 0.0)) throw ContractViolation("IsingInstance: T must be positive");
  if (!lambda_) throw ContractViolation("IsingInstance: missing schedule");
  if (std::abs(lambda_(0.0)) > 1e-12 || std::abs(lambda_(T_) - 1.0) > 1e-12) {
    throw ContractViolation("IsingInstance: schedule must satisfy lambda(0)=0 and lambda(T)=1");
  }
  if (!lambda_int_) {
    auto table = std::make_shared<CumulativeIntegral>(
        [l = lambda_](double s) { return RealVector::Constant(1, l(s)); }, TimeGrid(0.0, T_, 10000));
    lambda_int_ = [table](double s) { return table->value(s)(0); };
  }
}

IsingInstance IsingInstance::random(std::size_t n_spins, std::uint64_t seed, double gamma, double T) {
  if (n_spins == 0 || n_spins > kMaxSpins) throw ContractViolation("IsingInstance::random: spin count out of range");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto n = static_cast<Eigen::Index>(n_spins);
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) J(i, j) = J(j, i) = u(rng);
  }
  RealVector h(n);
  for (Eigen::Index i = 0; i < n; ++i) h(i) = u(rng);
  return IsingInstance(
      std::move(J), std::move(h), gamma, T, [T](double s) { return s / T; },
      [T](double s) { return s * s / (2.0 * T); });
}

double IsingInstance::sum_J_squared() const {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < J_.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < J_.cols(); ++j) acc += J_(i, j) * J_(i, j);
  }
  return acc;
}

double IsingInstance::sum_h_squared() const { return h_.squaredNorm(); }

int IsingInstance::spin(std::size_t config, std::size_t site) const {
  return ((config >> (n_spins() - 1 - site)) & 1u) ? -1 : 1;
}

double IsingInstance::field_overlap(std::size_t config) const {
  double m = 0.0;
  for (std::size_t i = 0; i < n_spins(); ++i) m += h_(static_cast<Eigen::Index>(i)) * spin(config, i);
  return m;
}

double IsingInstance::problem_energy(std::size_t config) const {
  double e = -field_overlap(config);
  for (std::size_t i = 0; i < n_spins(); ++i) {
    for (std::size_t j = i + 1; j < n_spins(); ++j) {
      e -= J_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * spin(config, i) * spin(config, j);
    }
  }
  return e;
}

namespace {

// Couplings-only diagonal -sum_{i<j} J_ij sigma_i sigma_j.
double coupling_energy(const IsingInstance& inst, std::size_t config) {
  return inst.problem_energy(config) + inst.field_overlap(config);
}

}  // namespace

HermitianOperator qa_hamiltonian(const IsingInstance& inst, double t) {
  const std::size_t n = inst.n_spins();
  const std::size_t dim = inst.dim();
  const double lam = inst.lambda(t);
  const double transverse = -(1.0 - lam) * inst.gamma();
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t x = 0; x < dim; ++x) {
    m(x, x) = lam * inst.problem_energy(x);
    for (std::size_t i = 0; i < n; ++i) m(x ^ (std::size_t{1} << (n - 1 - i)), x) = transverse;
  }
  return HermitianOperator(std::move(m));
}

HamiltonianFn qa_hamiltonian_fn(IsingInstance inst) {
  return [inst = std::move(inst)](double t) { return qa_hamiltonian(inst, t); };
}

double qa_hs_norm_sq(const IsingInstance& inst, double t) {
  const double lam = inst.lambda(t);
  const double n = static_cast<double>(inst.n_spins());
  const double g = inst.gamma();
  return static_cast<double>(inst.dim()) *
         (lam * lam * (inst.sum_J_squared() + inst.sum_h_squared()) + n * (1.0 - lam) * (1.0 - lam) * g * g);
}

double qa_suboptimal_ff_norm_sq(const IsingInstance& inst, const Rescaling& r, double t) {
  const double lam = inst.lambda(r.s(t));
  const double ds = r.ds_dt(t);
  const double n = static_cast<double>(inst.n_spins());
  const double g = inst.gamma();
  return static_cast<double>(inst.dim()) * ds * ds *
         (lam * lam * inst.sum_J_squared() + n * (1.0 - lam) * (1.0 - lam) * g * g);
}

double qa_suboptimal_cost(const IsingInstance& inst, const Rescaling& r, double t) {
  const double lam = inst.lambda(r.s(t));
  const double n = static_cast<double>(inst.n_spins());
  const double g2 = inst.gamma() * inst.gamma();
  const double driver = n * (1.0 - lam) * (1.0 - lam) * g2;
  const double num = lam * lam * inst.sum_J_squared() + driver;
  const double den = lam * lam * (inst.sum_J_squared() + inst.sum_h_squared()) + driver;
  return std::abs(r.ds_dt(t)) * std::sqrt(num / den);
}

MeasurementFrame computational_frame(std::size_t n_spins) {
  if (n_spins == 0 || n_spins > kMaxSpins) throw ContractViolation("computational_frame: spin count out of range");
  const std::size_t dim = std::size_t{1} << n_spins;
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    std::string l(n_spins, '+');
    for (std::size_t i = 0; i < n_spins; ++i) {
      if ((x >> (n_spins - 1 - i)) & 1u) l[i] = '-';
    }
    labels.push_back(std::move(l));
  }
  return MeasurementFrame::computational(dim, std::move(labels));
}

PhaseProfile qa_suboptimal_phase(const IsingInstance& inst, const Rescaling& r) {
  RealVector overlap(static_cast<Eigen::Index>(inst.dim()));
  for (std::size_t x = 0; x < inst.dim(); ++x) overlap(static_cast<Eigen::Index>(x)) = inst.field_overlap(x);
  return PhaseProfile(
      inst.dim(), [inst, r, overlap](double t) -> RealVector { return -inst.lambda_integral(r.s(t)) * overlap; },
      [inst, r, overlap](double t) -> RealVector { return -r.ds_dt(t) * inst.lambda(r.s(t)) * overlap; });
}

HermitianOperator qa_suboptimal_ff(const IsingInstance& inst, const Rescaling& r, double t) {
  const std::size_t n = inst.n_spins();
  const std::size_t dim = inst.dim();
  const double s = r.s(t);
  const double ds = r.ds_dt(t);
  const double lam = inst.lambda(s);
  const double big_lambda = inst.lambda_integral(s);
  const double amp = -ds * (1.0 - lam) * inst.gamma();

  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t x = 0; x < dim; ++x) {
    m(x, x) = ds * lam * coupling_energy(inst, x);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t bit = std::size_t{1} << (n - 1 - i);
      if (x & bit) continue;
      // cos(phi) X + sin(phi) Y: <0|.|1> = e^{-i phi}.
      const double phi = 2.0 * big_lambda * inst.h()(static_cast<Eigen::Index>(i));
      const Complex e = phase_factor(-phi);
      m(x, x | bit) = amp * e;
      m(x | bit, x) = amp * std::conj(e);
    }
  }
  return HermitianOperator(std::move(m));
}

}  // namespace ffscale::models
