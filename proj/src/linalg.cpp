#include "corrchan/linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace corrchan {

Mat identity(int dim) { return Mat::Identity(dim, dim); }

Mat pauli_x() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Mat pauli_y() {
  Mat m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}

Mat pauli_z() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

std::vector<Mat> pauli_ops() {
  return {identity(2), pauli_x(), pauli_y(), pauli_z()};
}

bool is_hermitian(const Mat& m, double tol) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unit_trace(const Mat& m, double tol) {
  return std::abs(m.trace() - Complex{1.0, 0.0}) <= tol;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat expm(const Mat& m, Complex scale) {
  if (m.rows() != m.cols()) throw std::invalid_argument("expm: non-square matrix");
  if (m.rows() > 256) throw std::invalid_argument("expm: dimension above 256");
  if (!m.allFinite()) throw std::invalid_argument("expm: non-finite entries");
  const Mat scaled = scale * m;
  // Hermitian argument: diagonalize. Covers both Hermitian m with real scale
  // and anti-Hermitian products like -i*H*t, which dominate the use sites.
  if (is_hermitian(m)) {
    Eigen::SelfAdjointEigenSolver<Mat> es(m);
    const Eigen::VectorXd& ev = es.eigenvalues();
    Vec phases(ev.size());
    for (int k = 0; k < ev.size(); ++k) phases(k) = std::exp(scale * ev(k));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  }
  return scaled.exp();
}

BasisPtr OperatorBasis::pauli() {
  static const BasisPtr instance{new OperatorBasis(2, 2.0, pauli_ops())};
  return instance;
}

BasisPtr OperatorBasis::matrix_units(int dim) {
  std::vector<Mat> els;
  els.reserve(static_cast<size_t>(dim) * dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Mat e = Mat::Zero(dim, dim);
      e(i, j) = 1.0;
      els.push_back(std::move(e));
    }
  return BasisPtr{new OperatorBasis(dim, 1.0, std::move(els))};
}

Eigen::VectorXcd vectorize(const Mat& op, const OperatorBasis& basis) {
  if (op.rows() != basis.dim() || op.cols() != basis.dim())
    throw std::invalid_argument("vectorize: dimension mismatch");
  Eigen::VectorXcd v(basis.size());
  for (int n = 0; n < basis.size(); ++n)
    v(n) = (basis.element(n).adjoint() * op).trace() / basis.norm_constant();
  return v;
}

Mat unvectorize(const Eigen::VectorXcd& v, const OperatorBasis& basis) {
  if (v.size() != basis.size())
    throw std::invalid_argument("unvectorize: length mismatch");
  Mat out = Mat::Zero(basis.dim(), basis.dim());
  for (int n = 0; n < basis.size(); ++n) out += v(n) * basis.element(n);
  return out;
}

Mat SuperOperator::apply(const Mat& op) const {
  return unvectorize(matrix * vectorize(op, *basis), *basis);
}

SuperOperator SuperOperator::operator*(const SuperOperator& rhs) const {
  return {hilbert_dim, matrix * rhs.matrix, basis};
}
SuperOperator SuperOperator::operator+(const SuperOperator& rhs) const {
  return {hilbert_dim, matrix + rhs.matrix, basis};
}
SuperOperator SuperOperator::operator-(const SuperOperator& rhs) const {
  return {hilbert_dim, matrix - rhs.matrix, basis};
}
SuperOperator SuperOperator::operator*(double w) const {
  return {hilbert_dim, w * matrix, basis};
}

SuperOperator identity_superop(const BasisPtr& basis) {
  return {basis->dim(), Mat::Identity(basis->size(), basis->size()), basis};
}

SuperOperator sandwich_superop(const Mat& a, const Mat& b, const BasisPtr& basis) {
  const int d = basis->dim();
  if (a.rows() != d || a.cols() != d || b.rows() != d || b.cols() != d)
    throw std::invalid_argument("sandwich_superop: dimension mismatch");
  const int n = basis->size();
  Mat s(n, n);
  for (int col = 0; col < n; ++col) {
    const Mat image = a * basis->element(col) * b.adjoint();
    s.col(col) = vectorize(image, *basis);
  }
  return {d, std::move(s), basis};
}

SuperOperator left_mult_superop(const Mat& b, const BasisPtr& basis) {
  return sandwich_superop(b, identity(basis->dim()), basis);
}

SuperOperator right_mult_superop(const Mat& b, const BasisPtr& basis) {
  // rho * B = 1 * rho * (B^dag)^dag
  return sandwich_superop(identity(basis->dim()), b.adjoint(), basis);
}

SuperOperator comm_superop(const Mat& b, const BasisPtr& basis) {
  SuperOperator l = left_mult_superop(b, basis);
  SuperOperator r = right_mult_superop(b, basis);
  return {basis->dim(), -kI * (l.matrix - r.matrix) / 2.0, basis};
}

SuperOperator anticomm_superop(const Mat& b, const BasisPtr& basis) {
  SuperOperator l = left_mult_superop(b, basis);
  SuperOperator r = right_mult_superop(b, basis);
  return {basis->dim(), (l.matrix + r.matrix) / 2.0, basis};
}

}  // namespace corrchan
