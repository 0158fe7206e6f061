#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "corrchan/system.hpp"

using namespace corrchan;

TEST_CASE("default build dimensions and states") {
  const SystemModel m = SystemModel::build({});
  CHECK(m.bath_dim() == 8);
  CHECK(m.joint_dim() == 16);
  CHECK(is_unit_trace(m.rho_S()));
  CHECK(is_unit_trace(m.rho_B()));
  CHECK(is_hermitian(m.rho_B()));
  // rho_S = |1><1| at full polarization with sz|1> = |1>.
  CHECK(std::abs(m.rho_S()(0, 0) - 1.0) < kStructuralTol);
}

TEST_CASE("parameter validation") {
  ExperimentParams p;
  p.bath_spins = 5;
  CHECK_THROWS(SystemModel::build(p));
  p = {};
  p.delta_t = 0;
  CHECK_THROWS(SystemModel::build(p));
  p = {};
  p.nu = -1;
  CHECK_THROWS(SystemModel::build(p));
}

TEST_CASE("hamiltonian structure") {
  const SystemModel m = SystemModel::build({});
  const ExperimentParams& p = m.params();
  // Diagonal of B: (J/2) sum of z eigenvalues; top corner has all spins up.
  CHECK(std::abs(m.B()(0, 0) - Complex{3.0 * p.J() / 2.0}) < 1e-10);
  // [H_B, sum sx] = 0 by construction: H_B is itself that sum scaled.
  Mat sum_x = Mat::Zero(8, 8);
  for (int i = 0; i < 3; ++i) sum_x += embed_spin(pauli_x(), i, 3);
  CHECK((m.H_B() * sum_x - sum_x * m.H_B()).norm() < 1e-9);
  // Pure dephasing: V commutes with the sensor population operator.
  const Mat szI = m.sensor_embed(pauli_z());
  CHECK((m.V() * szI - szI * m.V()).norm() < 1e-10);
}

TEST_CASE("bath spin permutation symmetry") {
  const SystemModel m = SystemModel::build({});
  // Swap of spins 0 and 1 on three spins.
  Mat swap01 = Mat::Zero(8, 8);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        swap01(4 * b + 2 * a + c, 4 * a + 2 * b + c) = 1.0;
  for (const Mat* op : {&m.H_B(), &m.B(), &m.rho_B()})
    CHECK((swap01 * (*op) * swap01.adjoint() - *op).norm() < 1e-10);
}

TEST_CASE("rho_B spectrum stays physical in the linear regime") {
  // The deviation form (1 + p_H sum sx)/2^k is a valid state only for
  // |p_H| <= 1/bath_spins; the default p_H = 1 is a pure scale convention
  // for signals linear in p_H, not a physical density matrix.
  for (const double ph : {0.0, 0.2, 1.0 / 3.0, -1.0 / 3.0}) {
    ExperimentParams p;
    p.p_H = ph;
    const SystemModel m = SystemModel::build(p);
    Eigen::SelfAdjointEigenSolver<Mat> es(m.rho_B());
    CHECK(es.eigenvalues().minCoeff() > -1e-12);
    CHECK(es.eigenvalues().maxCoeff() < 1.0 + 1e-12);
  }
}

TEST_CASE("interaction picture bath operator") {
  const SystemModel m = SystemModel::build({});
  CHECK((m.bath_operator_at(0.0) - m.B()).norm() < 1e-10 * m.B().norm());
  // Half a nutation period rotates each sz by pi about x: B -> -B.
  const double half_period = 1.0 / (2.0 * m.params().nu);
  CHECK((m.bath_operator_at(half_period) + m.B()).norm() < 1e-8);
  // Norm conservation and Hermiticity at random times.
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> ts(0.0, 1e-3);
  for (int trial = 0; trial < 5; ++trial) {
    const Mat bt = m.bath_operator_at(ts(rng));
    CHECK(is_hermitian(bt, 1e-10));
    CHECK(std::abs(bt.norm() - m.B().norm()) < 1e-10);
  }
  // Brute-force check against the generic matrix exponential.
  const double t = 7.3e-5;
  const Mat u = expm(m.H_B(), kI * t);
  CHECK((m.bath_operator_at(t) - u * m.B() * u.adjoint()).norm() < 1e-9);
  CHECK_THROWS(m.bath_operator_at(-1.0));
}

TEST_CASE("zero bath polarization kills odd correlation sources") {
  ExperimentParams p;
  p.p_H = 0.0;
  const SystemModel m = SystemModel::build(p);
  CHECK((m.rho_B() - identity(8) / 8.0).norm() < 1e-12);
  // Tr(B(t2) B-tilde(t1) rho_B) style traces with an odd number of sz's
  // vanish for the maximally mixed bath; spot-check the simplest one.
  CHECK(std::abs((m.B() * m.rho_B()).trace()) < 1e-12);
}

TEST_CASE("single spin bath brute force") {
  ExperimentParams p;
  p.bath_spins = 1;
  const SystemModel m = SystemModel::build(p);
  CHECK(m.joint_dim() == 4);
  CHECK((m.B() - (p.J() / 2.0) * pauli_z()).norm() < 1e-12);
  // B(t) for one spin: z rotated about x by angle 2 pi nu t.
  const double t = 3.1e-5;
  const double ang = 2.0 * M_PI * p.nu * t;
  const Mat want = (p.J() / 2.0) * (std::cos(ang) * pauli_z() + std::sin(ang) * pauli_y());
  CHECK((m.bath_operator_at(t) - want).norm() < 1e-9);
}
