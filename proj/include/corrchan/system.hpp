#ifndef CORRCHAN_SYSTEM_HPP
#define CORRCHAN_SYSTEM_HPP

#include "corrchan/linalg.hpp"

namespace corrchan {

/// Physical parameters of the sensor-bath experiment. All frequencies are
/// stored in Hz; Hamiltonians derived from them are in rad/s throughout, so
/// the coupling strength is J = 2 pi J_CH and is never stored separately.
struct ExperimentParams {
  double J_CH = 129.6;   // Hz, sensor-bath scalar coupling
  double nu = 24000.0;   // Hz, bath nutation (drive) frequency
  double p_C = 1.0;      // sensor polarization
  double p_H = 1.0;      // bath polarization
  double delta_t = 5e-4; // s, coupling window
  int n_repeat = 1;      // robust channel repetitions
  int bath_spins = 3;

  double J() const { return 2.0 * M_PI * J_CH; }  // rad/s
  void validate() const;
};

/// Spin-1/2 sensor coupled to a driven spin bath by pure dephasing:
/// H_B = pi nu sum_i sx_i, B = (J/2) sum_i sz_i, V = (1/2) sz (x) B.
class SystemModel {
 public:
  static SystemModel build(const ExperimentParams& params);

  const ExperimentParams& params() const { return params_; }
  int bath_dim() const { return bath_dim_; }
  int joint_dim() const { return 2 * bath_dim_; }

  const Mat& H_B() const { return h_b_; }
  const Mat& B() const { return b_; }
  const Mat& V() const { return v_; }
  const Mat& rho_S() const { return rho_s_; }
  const Mat& rho_B() const { return rho_b_; }

  /// Interaction-picture bath operator e^{iH_B t} B e^{-iH_B t}.
  Mat bath_operator_at(double t) const;

  /// Embeddings into the joint sensor (x) bath space, sensor first.
  Mat sensor_embed(const Mat& op) const;
  Mat bath_embed(const Mat& op) const;

 private:
  ExperimentParams params_;
  int bath_dim_ = 0;
  Mat h_b_, b_, v_, rho_s_, rho_b_;
  Eigen::SelfAdjointEigenSolver<Mat> h_b_eig_;
};

/// op acting on spin `index` of `count` spin-1/2 particles.
Mat embed_spin(const Mat& op, int index, int count);

}  // namespace corrchan

#endif
