#include "oracles.hpp"

#include <array>
#include <cmath>

namespace oracle {

ComplexMatrix random_complex(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const auto d = static_cast<Eigen::Index>(dim);
  ComplexMatrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = Complex(n(rng), n(rng));
  }
  return m;
}

HermitianOperator random_hermitian(std::size_t dim, std::mt19937_64& rng) {
  const ComplexMatrix a = random_complex(dim, rng);
  return HermitianOperator(0.5 * (a + a.adjoint()));
}

ComplexMatrix random_unitary(std::size_t dim, std::mt19937_64& rng) {
  const ComplexMatrix a = random_complex(dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(a);
  return qr.householderQ() * ComplexMatrix::Identity(a.rows(), a.cols());
}

double trace_of_square(const ComplexMatrix& h) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    for (Eigen::Index k = 0; k < h.cols(); ++k) acc += (h(i, k) * h(k, i)).real();
  }
  return acc;
}

PhaseProfile random_phases(std::size_t count, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const auto n = static_cast<Eigen::Index>(count);
  RealVector a(n), b(n), c(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    a(i) = u(rng);
    b(i) = u(rng);
    c(i) = u(rng);
  }
  auto values = [a, b, c](double t) -> RealVector {
    RealVector v(a.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) v(i) = a(i) * std::sin(b(i) * t) + c(i) * t * t;
    return v;
  };
  auto rates = [a, b, c](double t) -> RealVector {
    RealVector v(a.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) v(i) = a(i) * b(i) * std::cos(b(i) * t) + 2.0 * c(i) * t;
    return v;
  };
  return PhaseProfile(count, values, rates);
}

namespace {

ComplexMatrix gauge_unitary(const MeasurementFrame& frame, const PhaseProfile& phases, double t) {
  const ComplexMatrix b = frame.basis_at(t);
  const RealVector f = phases.values(t);
  ComplexMatrix u = ComplexMatrix::Zero(b.rows(), b.cols());
  for (Eigen::Index s = 0; s < b.cols(); ++s) {
    u += std::exp(Complex(0.0, f(s))) * b.col(s) * b.col(s).adjoint();
  }
  return u;
}

}  // namespace

ComplexMatrix ff_hamiltonian_by_difference(const HamiltonianFn& h, const Rescaling& r, const MeasurementFrame& frame,
                                           const PhaseProfile& phases, double t, double eps) {
  const ComplexMatrix u = gauge_unitary(frame, phases, t);
  const ComplexMatrix du = (gauge_unitary(frame, phases, t + eps) - gauge_unitary(frame, phases, t - eps)) / (2.0 * eps);
  return r.ds_dt(t) * u * h(r.s(t)).matrix() * u.adjoint() + Complex(0.0, 1.0) * du * u.adjoint();
}

double gauss_legendre(const std::function<double(double)>& f, double a, double b, int panels) {
  static const std::array<double, 5> x = {0.0, -0.5384693101056831, 0.5384693101056831, -0.9061798459386640,
                                          0.9061798459386640};
  static const std::array<double, 5> w = {0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
                                          0.2369268850561891, 0.2369268850561891};
  const double h = (b - a) / panels;
  double acc = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    for (int i = 0; i < 5; ++i) acc += w[i] * f(mid + 0.5 * h * x[i]);
  }
  return 0.5 * h * acc;
}

std::pair<double, double> eigenvalues_2x2(const ComplexMatrix& m) {
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const double tr = a + d;
  const double det = a * d - std::norm(m(0, 1));
  const double disc = std::sqrt(tr * tr / 4.0 - det);
  return {tr / 2.0 - disc, tr / 2.0 + disc};
}

HermitianOperator ising_by_embedding(const models::IsingInstance& inst, double s) {
  const std::size_t n = inst.n_spins();
  const double lam = inst.lambda(s);
  HermitianOperator h = HermitianOperator::zero(inst.dim());
  for (std::size_t i = 0; i < n; ++i) {
    const auto zi = embed_site(pauli_z(), i, n);
    h -= lam * inst.h()(static_cast<Eigen::Index>(i)) * zi;
    h -= (1.0 - lam) * inst.gamma() * embed_site(pauli_x(), i, n);
    for (std::size_t j = i + 1; j < n; ++j) {
      const ComplexMatrix zz = zi.matrix() * embed_site(pauli_z(), j, n).matrix();
      h -= lam * inst.J()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * HermitianOperator(zz);
    }
  }
  return h;
}

}  // namespace oracle
