#ifndef CORRCHAN_LINALG_HPP
#define CORRCHAN_LINALG_HPP

#include <complex>
#include <memory>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace corrchan {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Tolerance conventions used across the library: structural identities
// (round trips, algebraic rearrangements) at 1e-12, physics-level
// comparisons (two independent computations of the same quantity) at 1e-10.
inline constexpr double kStructuralTol = 1e-12;
inline constexpr double kPhysicsTol = 1e-10;

inline const Complex kI{0.0, 1.0};

Mat identity(int dim);
Mat pauli_x();
Mat pauli_y();
Mat pauli_z();

/// The four sensor-space basis operators {1, sx, sy, sz} in that order.
std::vector<Mat> pauli_ops();

bool is_hermitian(const Mat& m, double tol = kStructuralTol);
bool is_unit_trace(const Mat& m, double tol = kStructuralTol);

Mat kron(const Mat& a, const Mat& b);

/// exp(scale * m). Hermitian and anti-Hermitian inputs go through an
/// eigendecomposition; everything else falls back to scaling-and-squaring
/// (Pade) from Eigen's matrix functions.
Mat expm(const Mat& m, Complex scale = Complex{1.0, 0.0});

/// Ordered operator basis {A_n} with Tr(A_m^dag A_n) = c * delta_mn.
/// For dim 2 the canonical choice is the unnormalized Pauli set (c = 2),
/// matching the 4x4 superoperator matrices used throughout; larger spaces
/// use matrix units (c = 1).
class OperatorBasis {
 public:
  static std::shared_ptr<const OperatorBasis> pauli();
  static std::shared_ptr<const OperatorBasis> matrix_units(int dim);

  int dim() const { return dim_; }
  double norm_constant() const { return norm_; }
  const std::vector<Mat>& elements() const { return elements_; }
  const Mat& element(int n) const { return elements_.at(n); }
  int size() const { return static_cast<int>(elements_.size()); }

 private:
  OperatorBasis(int dim, double norm, std::vector<Mat> elements)
      : dim_(dim), norm_(norm), elements_(std::move(elements)) {}
  int dim_;
  double norm_;
  std::vector<Mat> elements_;
};

using BasisPtr = std::shared_ptr<const OperatorBasis>;

/// Coefficients v_n = Tr(A_n^dag op) / c.
Eigen::VectorXcd vectorize(const Mat& op, const OperatorBasis& basis);
Mat unvectorize(const Eigen::VectorXcd& v, const OperatorBasis& basis);

/// Linear map on operators, stored as its matrix in a declared basis.
struct SuperOperator {
  int hilbert_dim = 0;
  Mat matrix;  // size dim^2 x dim^2
  BasisPtr basis;

  Mat apply(const Mat& op) const;

  SuperOperator operator*(const SuperOperator& rhs) const;
  SuperOperator operator+(const SuperOperator& rhs) const;
  SuperOperator operator-(const SuperOperator& rhs) const;
  SuperOperator operator*(double w) const;
};

SuperOperator identity_superop(const BasisPtr& basis);

/// Superoperator of rho -> A rho B^dag.
SuperOperator sandwich_superop(const Mat& a, const Mat& b, const BasisPtr& basis);

/// Left / right multiplication maps rho -> B rho and rho -> rho B.
SuperOperator left_mult_superop(const Mat& b, const BasisPtr& basis);
SuperOperator right_mult_superop(const Mat& b, const BasisPtr& basis);

/// B^- rho = -i (B rho - rho B)/2 and B^+ rho = (B rho + rho B)/2.
SuperOperator comm_superop(const Mat& b, const BasisPtr& basis);
SuperOperator anticomm_superop(const Mat& b, const BasisPtr& basis);

}  // namespace corrchan

#endif
