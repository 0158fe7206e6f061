#include "corrchan/system.hpp"

namespace corrchan {

void ExperimentParams::validate() const {
  if (J_CH <= 0 || nu <= 0) throw std::invalid_argument("frequencies must be positive");
  if (delta_t <= 0) throw std::invalid_argument("delta_t must be positive");
  if (n_repeat < 1) throw std::invalid_argument("n_repeat must be >= 1");
  if (bath_spins < 1 || bath_spins > 4)
    throw std::invalid_argument("bath_spins must be in 1..4");
}

Mat embed_spin(const Mat& op, int index, int count) {
  if (index < 0 || index >= count) throw std::invalid_argument("spin index out of range");
  Mat out = identity(1);
  for (int i = 0; i < count; ++i)
    out = kron(out, i == index ? op : identity(2));
  return out;
}

SystemModel SystemModel::build(const ExperimentParams& params) {
  params.validate();
  SystemModel m;
  m.params_ = params;
  const int k = params.bath_spins;
  m.bath_dim_ = 1 << k;

  Mat sum_x = Mat::Zero(m.bath_dim_, m.bath_dim_);
  Mat sum_z = Mat::Zero(m.bath_dim_, m.bath_dim_);
  for (int i = 0; i < k; ++i) {
    sum_x += embed_spin(pauli_x(), i, k);
    sum_z += embed_spin(pauli_z(), i, k);
  }
  m.h_b_ = M_PI * params.nu * sum_x;
  m.b_ = (params.J() / 2.0) * sum_z;
  m.v_ = 0.5 * kron(pauli_z(), m.b_);
  m.rho_s_ = (identity(2) + params.p_C * pauli_z()) / 2.0;
  m.rho_b_ = (identity(m.bath_dim_) + params.p_H * sum_x) / static_cast<double>(m.bath_dim_);

  if (!is_hermitian(m.h_b_, 1e-9) || !is_hermitian(m.b_) || !is_hermitian(m.v_))
    throw std::logic_error("system operators must be Hermitian");
  if (!is_unit_trace(m.rho_s_) || !is_unit_trace(m.rho_b_))
    throw std::logic_error("initial states must have unit trace");

  m.h_b_eig_.compute(m.h_b_);
  return m;
}

Mat SystemModel::bath_operator_at(double t) const {
  if (t < 0) throw std::invalid_argument("bath_operator_at: negative time");
  const Eigen::VectorXd& ev = h_b_eig_.eigenvalues();
  Vec phases(ev.size());
  for (int i = 0; i < ev.size(); ++i) phases(i) = std::exp(kI * ev(i) * t);
  const Mat u = h_b_eig_.eigenvectors() * phases.asDiagonal() *
                h_b_eig_.eigenvectors().adjoint();
  return u * b_ * u.adjoint();
}

Mat SystemModel::sensor_embed(const Mat& op) const {
  return kron(op, identity(bath_dim_));
}

Mat SystemModel::bath_embed(const Mat& op) const {
  return kron(identity(2), op);
}

}  // namespace corrchan
