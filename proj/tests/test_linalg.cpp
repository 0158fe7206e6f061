#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "corrchan/linalg.hpp"

using namespace corrchan;

namespace {

std::mt19937_64 rng(12345);

Mat random_matrix(int dim) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = Complex{g(rng), g(rng)};
  return m;
}

Mat random_hermitian(int dim) {
  Mat m = random_matrix(dim);
  return (m + m.adjoint()) / 2.0;
}

Mat random_density(int dim) {
  Mat m = random_matrix(dim);
  Mat rho = m * m.adjoint();
  return rho / rho.trace();
}

}  // namespace

TEST_CASE("pauli algebra") {
  const Mat sx = pauli_x(), sy = pauli_y(), sz = pauli_z();
  CHECK((sx * sy - kI * sz).norm() == doctest::Approx(0.0));
  CHECK((sy * sz - kI * sx).norm() == doctest::Approx(0.0));
  CHECK((sz * sx - kI * sy).norm() == doctest::Approx(0.0));
  for (const Mat& s : {sx, sy, sz}) {
    CHECK((s * s - identity(2)).norm() == doctest::Approx(0.0));
    CHECK(is_hermitian(s));
    CHECK(std::abs(s.trace()) < kStructuralTol);
  }
}

TEST_CASE("basis orthogonality") {
  for (const BasisPtr& b : {OperatorBasis::pauli(), OperatorBasis::matrix_units(4),
                            OperatorBasis::matrix_units(16)}) {
    for (int m = 0; m < b->size(); ++m)
      for (int n = 0; n < b->size(); ++n) {
        const Complex ip = (b->element(m).adjoint() * b->element(n)).trace();
        const double want = (m == n) ? b->norm_constant() : 0.0;
        CHECK(std::abs(ip - want) < kStructuralTol);
      }
  }
}

TEST_CASE("vectorize round trip") {
  for (const BasisPtr& b : {OperatorBasis::pauli(), OperatorBasis::matrix_units(4)}) {
    for (int trial = 0; trial < 5; ++trial) {
      const Mat op = random_matrix(b->dim());
      const Mat back = unvectorize(vectorize(op, *b), *b);
      CHECK((back - op).norm() < kStructuralTol);
    }
  }
}

TEST_CASE("bloch components of a density matrix") {
  // rho = (1 + r.sigma)/2 must vectorize to (1/2, rx/2, ry/2, rz/2).
  const BasisPtr b = OperatorBasis::pauli();
  const Eigen::Vector3d r{0.3, -0.5, 0.7};
  const Mat rho =
      (identity(2) + r.x() * pauli_x() + r.y() * pauli_y() + r.z() * pauli_z()) / 2.0;
  const Vec v = vectorize(rho, *b);
  CHECK(std::abs(v(0) - 0.5) < kStructuralTol);
  CHECK(std::abs(v(1) - r.x() / 2.0) < kStructuralTol);
  CHECK(std::abs(v(2) - r.y() / 2.0) < kStructuralTol);
  CHECK(std::abs(v(3) - r.z() / 2.0) < kStructuralTol);
}

TEST_CASE("kron matches manual block layout") {
  const Mat a = random_matrix(2), b = random_matrix(3);
  const Mat k = kron(a, b);
  REQUIRE(k.rows() == 6);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK((k.block(3 * i, 3 * j, 3, 3) - a(i, j) * b).norm() < kStructuralTol);
  // Mixed-product property.
  const Mat c = random_matrix(2), d = random_matrix(3);
  CHECK((kron(a * c, b * d) - kron(a, b) * kron(c, d)).norm() < 1e-10);
}

TEST_CASE("expm against power series") {
  for (int trial = 0; trial < 3; ++trial) {
    const Mat h = random_hermitian(4) * 0.4;
    Mat series = Mat::Zero(4, 4), term = Mat::Identity(4, 4);
    for (int k = 1; k <= 40; ++k) {
      series += term;
      term = term * (-kI) * h / static_cast<double>(k);
    }
    CHECK((expm(h, -kI) - series).norm() < 1e-12);
    // Unitarity of exp(-iH).
    const Mat u = expm(h, -kI);
    CHECK((u * u.adjoint() - Mat::Identity(4, 4)).norm() < 1e-12);
  }
  // Non-Hermitian fallback path.
  const Mat m = random_matrix(3) * 0.3;
  Mat series = Mat::Zero(3, 3), term = Mat::Identity(3, 3);
  for (int k = 1; k <= 40; ++k) {
    series += term;
    term = term * m / static_cast<double>(k);
  }
  CHECK((expm(m) - series).norm() < 1e-12);
}

TEST_CASE("sandwich superoperator acts like A rho B^dag") {
  for (const BasisPtr& b : {OperatorBasis::pauli(), OperatorBasis::matrix_units(4)}) {
    const Mat a = random_matrix(b->dim()), c = random_matrix(b->dim());
    const SuperOperator s = sandwich_superop(a, c, b);
    for (int trial = 0; trial < 4; ++trial) {
      const Mat rho = random_density(b->dim());
      CHECK((s.apply(rho) - a * rho * c.adjoint()).norm() < 1e-12);
    }
  }
}

TEST_CASE("left right commutator and anticommutator maps") {
  const BasisPtr b = OperatorBasis::matrix_units(4);
  const Mat op = random_hermitian(4);
  const Mat rho = random_density(4);
  CHECK((left_mult_superop(op, b).apply(rho) - op * rho).norm() < 1e-12);
  CHECK((right_mult_superop(op, b).apply(rho) - rho * op).norm() < 1e-12);
  const Mat want_minus = -kI * (op * rho - rho * op) / 2.0;
  const Mat want_plus = (op * rho + rho * op) / 2.0;
  CHECK((comm_superop(op, b).apply(rho) - want_minus).norm() < 1e-12);
  CHECK((anticomm_superop(op, b).apply(rho) - want_plus).norm() < 1e-12);
  // For Hermitian op both maps are Hermiticity preserving and the minus map
  // is itself a Hermitian superoperator in the matrix-unit basis sense.
  CHECK(is_hermitian(comm_superop(op, b).apply(rho), 1e-12));
  CHECK(is_hermitian(anticomm_superop(op, b).apply(rho), 1e-12));
}

TEST_CASE("superoperator composition matches sequential application") {
  const BasisPtr b = OperatorBasis::pauli();
  const Mat a1 = random_matrix(2), a2 = random_matrix(2);
  const SuperOperator s1 = sandwich_superop(a1, a1, b);
  const SuperOperator s2 = sandwich_superop(a2, a2, b);
  const Mat rho = random_density(2);
  CHECK(((s2 * s1).apply(rho) - s2.apply(s1.apply(rho))).norm() < 1e-12);
  CHECK(((s1 + s2).apply(rho) - (s1.apply(rho) + s2.apply(rho))).norm() < 1e-12);
}
