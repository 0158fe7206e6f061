#ifndef CORRCHAN_CATALOG_HPP
#define CORRCHAN_CATALOG_HPP

#include <array>
#include <string>

#include <Eigen/Geometry>

#include "corrchan/linalg.hpp"

namespace corrchan {

enum class Axis { X, Y, Z };

Eigen::Vector3d axis_vector(Axis a);
char axis_char(Axis a);

/// One entry of the sensor operation catalog: a Bloch rotation, a signed
/// projective measurement along an axis, a polarization to the axis ground
/// state, or the identity. Rotations admit arbitrary angles so that pulse
/// errors (pi/2 -> pi/2 + dtheta) stay inside the same type.
struct CatalogOperation {
  enum class Kind { Identity, Rotation, Measurement, Polarization };

  Kind kind = Kind::Identity;
  double angle = 0.0;            // rad, rotations only
  Eigen::Vector3d axis{0, 0, 1}; // unit vector, rotations only
  Axis meas_axis = Axis::Z;      // measurement / polarization

  std::string label() const;

  static CatalogOperation identity();
  static CatalogOperation rotation(double angle, const Eigen::Vector3d& axis);
  static CatalogOperation measurement(Axis a);
  static CatalogOperation polarization(Axis a);

  SuperOperator superop() const;
};

/// Bloch-block rotation superoperator diag(1, R(theta, n)). The 3x3 block
/// is the right-handed active rotation, i.e. (pi/2, e_y) carries z to x,
/// matching conjugation by exp(-i theta n.sigma / 2).
SuperOperator rotation_superop(double angle, const Eigen::Vector3d& axis);

/// Signed measurement map |+a><+a| rho |+a><+a| - |-a><-a| rho |-a><-a|.
/// Not trace preserving; realized physically by outcome post-processing.
SuperOperator measurement_superop(Axis a);

/// Trace-preserving polarization onto the axis ground state. For z this is
/// the Kraus pair |0><0| rho |0><0| + |0><1| rho |1><0| with |0> the -z
/// eigenstate; x and y are rotated conjugates of the z map. This is the one
/// place that fixes the |0> = |-z> sign convention.
SuperOperator polarization_superop(Axis a);

Mat ket_ground();   // |0> = |-z>
Mat ket_excited();  // |1> = |+z>

/// The sixteen canonical operations, in the catalog's fixed column order:
/// R0, Rx+90, Ry+90, Rz+90, Rx-90, Ry-90, Rz-90, Rxy180, Ryz180, Rzx180,
/// Mx, My, Mz, Px, Py, Pz.
const std::array<CatalogOperation, 16>& catalog_operations();
int catalog_index(const std::string& label);

/// The sixteen generators J of the sandwich algebra sigma_i rho sigma_j,
/// regrouped into symmetric / antisymmetric combinations.
struct GeneratorIndex {
  enum class Kind { Unit, SingleSym, SingleAnti, PairSym, PairAnti };
  Kind kind = Kind::Unit;
  int alpha = 0;  // 1..3 for x,y,z
  int beta = 0;
};

SuperOperator generator_superop(const GeneratorIndex& g);

/// Residual Frobenius norm between rotation_superop(angle, axis) and its
/// generator expansion cos^2(t) J0 + 2 cos t sin t n_a Ja^- +
/// sin^2(t) n_a n_b Jab^+ with t = angle/2.
double unitary_generator_expansion_check(double angle, const Eigen::Vector3d& axis);

}  // namespace corrchan

#endif
