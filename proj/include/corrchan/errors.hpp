#ifndef CORRCHAN_ERRORS_HPP
#define CORRCHAN_ERRORS_HPP

#include <vector>

#include "corrchan/synthesis.hpp"
#include "corrchan/system.hpp"

namespace corrchan {

/// Measured imperfection parameters of the experiment. A readout_sigma of
/// zero means "use the per-protocol calibrated default".
struct ErrorParams {
  double delta_theta = 0.04;  // rad, pi/2 pulse angle error
  double k_decay = 2.76e3;    // 1/s, RF-inhomogeneity amplitude decay rate
  double readout_sigma = 0.0; // absolute signal noise std, 0 = default
  double gaussian_s = 5e3;    // phase variance rate of the dephasing model
  unsigned long long seed = 0;

  void validate() const;
};

/// Readout noise std calibrated per protocol order so the error budget
/// reproduces the observed optimal coupling windows.
double default_readout_sigma(int theta);

/// Replaces every +-pi/2 rotation angle by +-(pi/2 + dtheta), keeping axes
/// and weights. Terms that are not pi/2 rotations pass through unchanged and
/// are counted.
struct PulseErrorReport {
  std::vector<SynthesizedChannel> channels;
  int untouched_terms = 0;
};
PulseErrorReport inject_pulse_error(const std::vector<SynthesizedChannel>& channels,
                                    double delta_theta);

/// Pointwise signal amplitude decay e^{-k t}.
std::vector<double> apply_amplitude_decay(const std::vector<double>& values,
                                          const std::vector<double>& times,
                                          double k);

/// Ensemble average of a y rotation whose angle is Gaussian with mean
/// lambda*t: the in-plane Bloch components rotate by lambda*t and shrink by
/// e^{-s t / 2}, the y component is untouched.
Mat gaussian_dephasing(const Mat& rho, double lambda, double s, double t);

/// Adds iid Gaussian noise of std sigma; deterministic for a fixed seed.
std::vector<double> add_readout_noise(const std::vector<double>& values,
                                      double sigma, unsigned long long seed);

/// Pointwise absolute errors and the Euclidean relative error ||x-y||/||y||.
struct DeviationMetrics {
  std::vector<double> absolute;
  double relative = 0.0;
};
DeviationMetrics deviation_metrics(const std::vector<double>& x,
                                   const std::vector<double>& y);

/// Grid data the budget model needs: the leading signal coefficients, the
/// next-order coefficients (extracted from the non-perturbative formulas by
/// Richardson extrapolation), and the per-point free-evolution time.
struct BudgetInputs {
  int theta = 2;
  Eigen::VectorXd target;      // leading coefficients A*C on the grid
  Eigen::VectorXd next_order;  // delta_t^{theta+2} coefficients
  Eigen::VectorXd elapsed;     // free evolution per point, for the decay term
  double p_C = 1.0;
};
BudgetInputs budget_inputs(const ExperimentParams& params, int theta,
                           const std::vector<double>& tau_grid);

/// The approximate total-error model: truncation a*dt^2, readout
/// b*dt^{-theta}, plus dt-independent pulse and evolution terms.
struct ErrorBudget {
  double truncation = 0.0;
  double readout = 0.0;
  double pulse = 0.0;
  double evolution = 0.0;
  double total = 0.0;
};
ErrorBudget total_error(double delta_t, const BudgetInputs& inputs,
                        const ErrorParams& errors);

/// Stationary point of a*dt^2 + b*dt^{-theta}:
/// dt_opt = (theta*||E_r|| / (2*||C_next||))^{1/(theta+2)}.
double optimal_dt(int theta, double norm_c_next, double norm_e_r);

/// LHS/RHS of the leakage-suppression condition
/// (1 - dtheta^2/2)^3 (J dt)^2 / 4 >> |dtheta|^n; ratio > 1 means the
/// target term dominates the leakage term.
struct LeakageMargin {
  double ratio = 0.0;
  bool unbounded = false;  // dtheta = 0: no leakage at all
};
LeakageMargin leakage_margin(double delta_theta, double delta_t, int n,
                             const ExperimentParams& params);

}  // namespace corrchan

#endif
