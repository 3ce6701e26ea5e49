#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "ffscale/core/evolve.hpp"
#include "ffscale/core/linalg.hpp"
#include "ffscale/core/quadrature.hpp"
#include "oracles.hpp"

using namespace ffscale;

TEST_CASE("hermitian operator validation") {
  ComplexMatrix rect(2, 3);
  rect.setZero();
  CHECK_THROWS_AS(HermitianOperator{rect}, ContractViolation);
  CHECK_THROWS_AS(HermitianOperator{ComplexMatrix(0, 0)}, ContractViolation);

  ComplexMatrix m(2, 2);
  m << 1.0, Complex(0.0, 1.0), Complex(0.0, 1.0), 2.0;
  CHECK_THROWS_AS(HermitianOperator{m}, ContractViolation);

  m << 1.0, Complex(0.5, 0.2), Complex(0.5, -0.2 + 1e-14), 2.0;
  HermitianOperator h(m);
  CHECK((h.matrix() - h.matrix().adjoint()).norm() == 0.0);
}

TEST_CASE("pauli algebra") {
  const auto x = pauli_x().matrix();
  const auto y = pauli_y().matrix();
  const auto z = pauli_z().matrix();
  CHECK((x * y - kI * z).norm() < 1e-15);
  CHECK((x * x - ComplexMatrix::Identity(2, 2)).norm() < 1e-15);
  CHECK(hs_norm(pauli_x()) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("embed_site uses most significant bit for site 0") {
  const auto z0 = embed_site(pauli_z(), 0, 2);
  // basis order |00>, |01>, |10>, |11>
  CHECK(z0(0, 0).real() == 1.0);
  CHECK(z0(1, 1).real() == 1.0);
  CHECK(z0(2, 2).real() == -1.0);
  const auto x1 = embed_site(pauli_x(), 1, 2);
  CHECK(x1(0, 1).real() == 1.0);
  CHECK(x1(0, 2).real() == 0.0);
  CHECK_THROWS_AS(embed_site(pauli_x(), 2, 2), ContractViolation);
  CHECK_THROWS_AS(embed_site(pauli_x(), 0, 13), ContractViolation);
}

TEST_CASE("hs_norm matches the trace of the square") {
  std::mt19937_64 rng(11);
  for (std::size_t d = 1; d <= 8; ++d) {
    const auto h = oracle::random_hermitian(d, rng);
    CHECK(hs_norm(h) * hs_norm(h) == doctest::Approx(oracle::trace_of_square(h.matrix())).epsilon(1e-13));
  }
}

TEST_CASE("eigendecompose phase convention and accuracy") {
  std::mt19937_64 rng(3);
  for (std::size_t d = 2; d <= 6; ++d) {
    const auto h = oracle::random_hermitian(d, rng);
    const auto es = eigendecompose(h);
    CHECK(orthonormality_defect(es.vectors) < 1e-12);
    for (Eigen::Index i = 1; i < es.values.size(); ++i) CHECK(es.values(i) >= es.values(i - 1));
    const ComplexMatrix rec = es.vectors * es.values.cast<Complex>().asDiagonal() * es.vectors.adjoint();
    CHECK((rec - h.matrix()).norm() < 1e-12);
    for (Eigen::Index c = 0; c < es.vectors.cols(); ++c) {
      const auto col = es.vectors.col(c);
      Eigen::Index pivot;
      col.cwiseAbs().maxCoeff(&pivot);
      CHECK(std::abs(col(pivot).imag()) < 1e-12);
      CHECK(col(pivot).real() > 0.0);
    }
  }
  ComplexMatrix m(2, 2);
  m << 0.3, Complex(0.1, -0.4), Complex(0.1, 0.4), -1.2;
  const auto [lo, hi] = oracle::eigenvalues_2x2(m);
  const auto es = eigendecompose(HermitianOperator(m));
  CHECK(es.values(0) == doctest::Approx(lo).epsilon(1e-14));
  CHECK(es.values(1) == doctest::Approx(hi).epsilon(1e-14));
}

TEST_CASE("measurement probabilities") {
  ComplexVector v(2);
  v << 0.6, Complex(0.0, 0.8);
  const auto p = measurement_probabilities(StateVector(v), ComplexMatrix::Identity(2, 2));
  CHECK(p(0) == doctest::Approx(0.36));
  CHECK(p(1) == doctest::Approx(0.64));
  v << 1.0, 1.0;
  CHECK_THROWS_AS(measurement_probabilities(StateVector(v), ComplexMatrix::Identity(2, 2)), ContractViolation);
}

TEST_CASE("phase factor reduces large arguments") {
  const double x = 1e6 * std::numbers::pi + 0.3;
  CHECK(std::abs(phase_factor(x) - std::exp(Complex(0.0, 0.3))) < 1e-8);
  CHECK(std::abs(phase_factor(0.0) - Complex(1.0, 0.0)) == 0.0);
}

TEST_CASE("time grid") {
  TimeGrid g(0.0, 1.0, 3);
  CHECK(g.n_points() == 4);
  CHECK(g.at(3) == 1.0);
  CHECK(g.refined().n_steps() == 6);
  CHECK_THROWS_AS(TimeGrid(0.0, 1.0, 0), ContractViolation);
  CHECK_THROWS_AS(TimeGrid(1.0, 1.0, 4), ContractViolation);
}

TEST_CASE("simpson against Gauss-Legendre") {
  auto f = [](double x) { return std::exp(-x) * std::sin(3.0 * x); };
  const double ref = oracle::gauss_legendre(f, 0.0, 2.0, 200);
  for (std::size_t n : {10u, 11u, 100u, 101u}) {
    TimeGrid g(0.0, 2.0, n);
    std::vector<double> y(g.n_points());
    for (std::size_t k = 0; k < y.size(); ++k) y[k] = f(g.at(k));
    const double tol = n < 50 ? 1e-3 : 1e-7;
    CHECK(simpson(y, g.spacing()) == doctest::Approx(ref).epsilon(tol));
  }
  std::vector<double> two{1.0, 3.0};
  CHECK(simpson(two, 0.5) == doctest::Approx(1.0));
}

TEST_CASE("simpson is exact for cubics") {
  auto f = [](double x) { return 2.0 * x * x * x - x + 1.0; };
  for (std::size_t n : {2u, 3u, 7u, 8u}) {
    TimeGrid g(-1.0, 2.0, n);
    std::vector<double> y(g.n_points());
    for (std::size_t k = 0; k < y.size(); ++k) y[k] = f(g.at(k));
    // 2x^4/4 - x^2/2 + x from -1 to 2: (8 - 2 + 2) - (0.5 - 0.5 - 1) = 9
    CHECK(simpson(y, g.spacing()) == doctest::Approx(9.0).epsilon(1e-13));
  }
}

TEST_CASE("cumulative integral off-grid evaluation") {
  CumulativeIntegral ci(
      [](double t) {
        RealVector v(2);
        v << std::cos(t), 3.0 * t * t;
        return v;
      },
      TimeGrid(0.0, 2.0, 50));
  for (double t : {0.0, 0.013, 0.5, 1.2345, 2.0}) {
    const RealVector v = ci.value(t);
    CHECK(v(0) == doctest::Approx(std::sin(t)).epsilon(1e-9));
    CHECK(v(1) == doctest::Approx(t * t * t).epsilon(1e-12));
  }
}

TEST_CASE("evolve: Rabi oscillation") {
  const double g = 1.3;
  HamiltonianFn h = [g](double) { return g * pauli_x(); };
  TimeGrid grid(0.0, 2.0, 2000);
  const auto traj = evolve(h, StateVector::basis(2, 0), grid);
  REQUIRE(traj.states.size() == grid.n_points());
  for (std::size_t k = 0; k < grid.n_points(); k += 250) {
    const double t = grid.at(k);
    CHECK(std::norm(traj.states[k][1]) == doctest::Approx(std::pow(std::sin(g * t), 2)).epsilon(1e-9));
  }
  CHECK(traj.norm_drift < 1e-9);
}

TEST_CASE("evolve: step halving converges at fourth order") {
  HamiltonianFn h = [](double t) { return std::cos(t) * pauli_x() + t * pauli_z(); };
  auto final_state = [&](std::size_t n) { return evolve(h, StateVector::basis(2, 0), TimeGrid(0.0, 1.0, n)).states.back(); };
  const auto a = final_state(200);
  const auto b = final_state(400);
  const auto c = final_state(800);
  const double e1 = (a.amplitudes() - b.amplitudes()).norm();
  const double e2 = (b.amplitudes() - c.amplitudes()).norm();
  CHECK(e2 < 1e-9);
  CHECK(e1 / e2 > 12.0);
}

TEST_CASE("evolve contract checks") {
  HamiltonianFn h = [](double) { return pauli_x(); };
  ComplexVector v(2);
  v << 1.0, 1.0;
  CHECK_THROWS_AS(evolve(h, StateVector(v), TimeGrid(0.0, 1.0, 10)), ContractViolation);
  CHECK_THROWS_AS(evolve(h, StateVector::basis(4, 0), TimeGrid(0.0, 1.0, 10)), ContractViolation);
  HamiltonianFn big = [](double) { return 1e4 * pauli_x(); };
  CHECK_THROWS_AS(evolve(big, StateVector::basis(2, 0), TimeGrid(0.0, 1.0, 10)), NumericalError);
}

TEST_CASE("hs_norm examples and basis independence") {
  CHECK(hs_norm(pauli_z()) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(hs_norm(HermitianOperator::zero(5)) == 0.0);
  CHECK(hs_norm(3.0 * pauli_z() + 4.0 * pauli_x()) == doctest::Approx(std::sqrt(50.0)).epsilon(1e-15));
  std::mt19937_64 rng(4);
  for (std::size_t d : {4u, 9u, 16u}) {
    const auto h = oracle::random_hermitian(d, rng);
    const auto u = oracle::random_unitary(d, rng);
    CHECK(std::abs(hs_norm(h.conjugated_by(u)) - hs_norm(h)) < 1e-10);
  }
}

TEST_CASE("evolve: trivial and stationary dynamics") {
  ComplexVector v(2);
  v << 0.6, Complex(0.0, 0.8);
  const StateVector psi(v);
  const TimeGrid grid(0.0, 1.0, 100);
  const auto still = evolve([](double) { return HermitianOperator::zero(2); }, psi, grid);
  for (const auto& s : still.states) CHECK((s.amplitudes() - v).norm() == 0.0);

  const double w = 2.5;
  const auto rot = evolve([w](double) { return w * pauli_z(); }, StateVector::basis(2, 0), TimeGrid(0.0, 1.0, 1000));
  for (std::size_t k = 0; k < rot.states.size(); k += 100) {
    const double t = k * 1e-3;
    CHECK(std::abs(rot.states[k][0] - std::exp(Complex(0.0, -w * t))) < 1e-10);
    CHECK(std::abs(rot.states[k][1]) == 0.0);
  }
}

TEST_CASE("evolve: magnetization reversal step halving") {
  // omega(t) = 5 - t, Gamma = 0.1 over [0, 10]
  HamiltonianFn h = [](double t) { return (5.0 - t) * pauli_z() + 0.1 * pauli_x(); };
  const auto a = evolve(h, StateVector::basis(2, 1), TimeGrid(0.0, 10.0, 100000));
  const auto b = evolve(h, StateVector::basis(2, 1), TimeGrid(0.0, 10.0, 200000));
  double worst = 0.0;
  for (std::size_t k = 0; k < a.states.size(); k += 1000) {
    worst = std::max(worst, (a.states[k].amplitudes() - b.states[2 * k].amplitudes()).cwiseAbs().maxCoeff());
  }
  CHECK(worst < 1e-9);
  CHECK(a.norm_drift < 1e-9);
}

TEST_CASE("measurement probability examples") {
  const auto p = measurement_probabilities(StateVector::basis(2, 0), ComplexMatrix::Identity(2, 2));
  CHECK(p(0) == 1.0);
  CHECK(p(1) == 0.0);
  ComplexVector v(2);
  v << M_SQRT1_2, M_SQRT1_2;
  const auto q = measurement_probabilities(StateVector(v), ComplexMatrix::Identity(2, 2));
  CHECK(q(0) == doctest::Approx(0.5));
  CHECK(q(1) == doctest::Approx(0.5));

  // omega = Gamma: eigenvectors at angle pi/8 from the Z axis.
  const auto es = eigendecompose(pauli_z() + pauli_x());
  const double c = std::cos(std::numbers::pi / 8.0);
  const double s = std::sin(std::numbers::pi / 8.0);
  ComplexVector w(2);
  w << 0.6, 0.8;
  const auto pe = measurement_probabilities(StateVector(w), es.vectors);
  CHECK(pe(1) == doctest::Approx(std::pow(0.6 * c + 0.8 * s, 2)).epsilon(1e-12));
  CHECK(pe(0) == doctest::Approx(std::pow(-0.6 * s + 0.8 * c, 2)).epsilon(1e-12));

  std::mt19937_64 rng(12);
  for (std::size_t d = 2; d <= 8; ++d) {
    ComplexVector x = oracle::random_complex(d, rng).col(0);
    x.normalize();
    CHECK(measurement_probabilities(StateVector(x), oracle::random_unitary(d, rng)).sum() ==
          doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("eigendecompose examples") {
  const auto d = eigendecompose(HermitianOperator::diagonal(RealVector{{1.0, -1.0}}));
  CHECK(d.values(0) == -1.0);
  CHECK(d.values(1) == 1.0);
  CHECK(std::abs(d.vectors(1, 0) - Complex(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(d.vectors(0, 1) - Complex(1.0, 0.0)) < 1e-15);
  const auto e = eigendecompose(5.0 * pauli_z() + 0.1 * pauli_x());
  CHECK(e.values(1) == doctest::Approx(std::hypot(5.0, 0.1)).epsilon(1e-14));
  CHECK(e.values(0) == doctest::Approx(-std::hypot(5.0, 0.1)).epsilon(1e-14));
  std::mt19937_64 rng(8);
  const auto h = oracle::random_hermitian(8, rng);
  const auto es = eigendecompose(h);
  ComplexMatrix rec = ComplexMatrix::Zero(8, 8);
  for (Eigen::Index n = 0; n < 8; ++n) rec += es.values(n) * es.vectors.col(n) * es.vectors.col(n).adjoint();
  CHECK((rec - h.matrix()).cwiseAbs().maxCoeff() < 1e-9);
}
