#include "corrchan/catalog.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace corrchan {

namespace {

const BasisPtr& sensor_basis() {
  static const BasisPtr b = OperatorBasis::pauli();
  return b;
}

Mat sigma(int alpha) {
  switch (alpha) {
    case 1: return pauli_x();
    case 2: return pauli_y();
    case 3: return pauli_z();
    default: return identity(2);
  }
}

Mat sigma(Axis a) {
  switch (a) {
    case Axis::X: return pauli_x();
    case Axis::Y: return pauli_y();
    default: return pauli_z();
  }
}

}  // namespace

Eigen::Vector3d axis_vector(Axis a) {
  switch (a) {
    case Axis::X: return {1, 0, 0};
    case Axis::Y: return {0, 1, 0};
    default: return {0, 0, 1};
  }
}

char axis_char(Axis a) {
  switch (a) {
    case Axis::X: return 'x';
    case Axis::Y: return 'y';
    default: return 'z';
  }
}

SuperOperator rotation_superop(double angle, const Eigen::Vector3d& axis) {
  if (std::abs(axis.norm() - 1.0) > kStructuralTol)
    throw std::invalid_argument("rotation_superop: axis is not a unit vector");
  Mat m = Mat::Zero(4, 4);
  m(0, 0) = 1.0;
  const Eigen::Matrix3d r = Eigen::AngleAxisd(angle, axis).toRotationMatrix();
  m.block<3, 3>(1, 1) = r.cast<Complex>();
  return {2, std::move(m), sensor_basis()};
}

SuperOperator measurement_superop(Axis a) {
  const Mat s = sigma(a);
  const Mat plus = (identity(2) + s) / 2.0;
  const Mat minus = (identity(2) - s) / 2.0;
  SuperOperator up = sandwich_superop(plus, plus, sensor_basis());
  SuperOperator down = sandwich_superop(minus, minus, sensor_basis());
  return up - down;
}

Mat ket_ground() {
  Mat v(2, 1);
  v << 0, 1;  // -z eigenstate of sigma_z = diag(1,-1)
  return v;
}

Mat ket_excited() {
  Mat v(2, 1);
  v << 1, 0;
  return v;
}

SuperOperator polarization_superop(Axis a) {
  const Mat k0 = ket_ground();
  const Mat k1 = ket_excited();
  const Mat p00 = k0 * k0.adjoint();
  const Mat p01 = k0 * k1.adjoint();
  SuperOperator pz = sandwich_superop(p00, p00, sensor_basis()) +
                     sandwich_superop(p01, p01, sensor_basis());
  const double half_pi = M_PI / 2.0;
  switch (a) {
    case Axis::Z:
      return pz;
    case Axis::X:
      return rotation_superop(half_pi, axis_vector(Axis::Y)) * pz *
             rotation_superop(-half_pi, axis_vector(Axis::Y));
    default:  // Y
      return rotation_superop(-half_pi, axis_vector(Axis::X)) * pz *
             rotation_superop(half_pi, axis_vector(Axis::X));
  }
}

CatalogOperation CatalogOperation::identity() { return {}; }

CatalogOperation CatalogOperation::rotation(double angle, const Eigen::Vector3d& axis) {
  CatalogOperation op;
  op.kind = Kind::Rotation;
  op.angle = angle;
  op.axis = axis.normalized();
  return op;
}

CatalogOperation CatalogOperation::measurement(Axis a) {
  CatalogOperation op;
  op.kind = Kind::Measurement;
  op.meas_axis = a;
  return op;
}

CatalogOperation CatalogOperation::polarization(Axis a) {
  CatalogOperation op;
  op.kind = Kind::Polarization;
  op.meas_axis = a;
  return op;
}

SuperOperator CatalogOperation::superop() const {
  switch (kind) {
    case Kind::Identity: return identity_superop(sensor_basis());
    case Kind::Rotation: return rotation_superop(angle, axis);
    case Kind::Measurement: return measurement_superop(meas_axis);
    default: return polarization_superop(meas_axis);
  }
}

std::string CatalogOperation::label() const {
  switch (kind) {
    case Kind::Identity:
      return "R0";
    case Kind::Measurement:
      return std::string("M") + axis_char(meas_axis);
    case Kind::Polarization:
      return std::string("P") + axis_char(meas_axis);
    default:
      break;
  }
  const double deg = angle * 180.0 / M_PI;
  std::ostringstream os;
  os << "R";
  // Name principal and diagonal axes symbolically, anything else numerically.
  const Eigen::Vector3d& n = axis;
  auto near = [](double a, double b) { return std::abs(a - b) < 1e-9; };
  const double s = 1.0 / std::sqrt(2.0);
  if (near(n.x(), 1) && near(n.y(), 0) && near(n.z(), 0)) os << "x";
  else if (near(n.x(), 0) && near(n.y(), 1) && near(n.z(), 0)) os << "y";
  else if (near(n.x(), 0) && near(n.y(), 0) && near(n.z(), 1)) os << "z";
  else if (near(n.x(), s) && near(n.y(), s) && near(n.z(), 0)) os << "xy";
  else if (near(n.x(), 0) && near(n.y(), s) && near(n.z(), s)) os << "yz";
  else if (near(n.x(), s) && near(n.y(), 0) && near(n.z(), s)) os << "zx";
  else os << "(" << n.x() << "," << n.y() << "," << n.z() << ")";
  if (deg >= 0) os << "+";
  // Round to 1e-12 degrees so canonical angles print exactly ("Rx+90")
  // while arbitrary angles stay parseable to full working precision.
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", std::round(deg * 1e12) / 1e12);
  os << buf;
  return os.str();
}

const std::array<CatalogOperation, 16>& catalog_operations() {
  static const std::array<CatalogOperation, 16> ops = [] {
    const double hp = M_PI / 2.0;
    const double s = 1.0 / std::sqrt(2.0);
    std::array<CatalogOperation, 16> a = {
        CatalogOperation::identity(),
        CatalogOperation::rotation(hp, {1, 0, 0}),
        CatalogOperation::rotation(hp, {0, 1, 0}),
        CatalogOperation::rotation(hp, {0, 0, 1}),
        CatalogOperation::rotation(-hp, {1, 0, 0}),
        CatalogOperation::rotation(-hp, {0, 1, 0}),
        CatalogOperation::rotation(-hp, {0, 0, 1}),
        CatalogOperation::rotation(M_PI, {s, s, 0}),
        CatalogOperation::rotation(M_PI, {0, s, s}),
        CatalogOperation::rotation(M_PI, {s, 0, s}),
        CatalogOperation::measurement(Axis::X),
        CatalogOperation::measurement(Axis::Y),
        CatalogOperation::measurement(Axis::Z),
        CatalogOperation::polarization(Axis::X),
        CatalogOperation::polarization(Axis::Y),
        CatalogOperation::polarization(Axis::Z),
    };
    return a;
  }();
  return ops;
}

int catalog_index(const std::string& label) {
  static const std::map<std::string, int> index = [] {
    std::map<std::string, int> m;
    const auto& ops = catalog_operations();
    for (int i = 0; i < 16; ++i) m[ops[i].label()] = i;
    return m;
  }();
  auto it = index.find(label);
  if (it == index.end())
    throw std::invalid_argument("unknown catalog operation label: " + label);
  return it->second;
}

SuperOperator generator_superop(const GeneratorIndex& g) {
  const BasisPtr& b = sensor_basis();
  switch (g.kind) {
    case GeneratorIndex::Kind::Unit:
      return identity_superop(b);
    case GeneratorIndex::Kind::SingleSym:
      return anticomm_superop(sigma(g.alpha), b);
    case GeneratorIndex::Kind::SingleAnti:
      return comm_superop(sigma(g.alpha), b);
    case GeneratorIndex::Kind::PairSym: {
      SuperOperator ab = sandwich_superop(sigma(g.alpha), sigma(g.beta), b);
      SuperOperator ba = sandwich_superop(sigma(g.beta), sigma(g.alpha), b);
      return (ab + ba) * 0.5;
    }
    default: {  // PairAnti
      SuperOperator ab = sandwich_superop(sigma(g.alpha), sigma(g.beta), b);
      SuperOperator ba = sandwich_superop(sigma(g.beta), sigma(g.alpha), b);
      return {2, -kI * (ab.matrix - ba.matrix) / 2.0, b};
    }
  }
}

double unitary_generator_expansion_check(double angle, const Eigen::Vector3d& axis) {
  if (std::abs(axis.norm() - 1.0) > kStructuralTol)
    throw std::invalid_argument("expansion check: axis is not a unit vector");
  // U = cos(t) 1 - i sin(t) n.sigma with t = angle/2 (half the Bloch angle).
  const double t = angle / 2.0;
  const double c = std::cos(t), s = std::sin(t);
  Mat m = c * c * Mat::Identity(4, 4);
  for (int a = 1; a <= 3; ++a) {
    GeneratorIndex ja{GeneratorIndex::Kind::SingleAnti, a, 0};
    m += 2.0 * c * s * axis(a - 1) * generator_superop(ja).matrix;
    for (int bb = 1; bb <= 3; ++bb) {
      GeneratorIndex jab{GeneratorIndex::Kind::PairSym, a, bb};
      m += s * s * axis(a - 1) * axis(bb - 1) * generator_superop(jab).matrix;
    }
  }
  return (m - rotation_superop(angle, axis).matrix).norm();
}

}  // namespace corrchan
