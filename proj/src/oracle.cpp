#include "corrchan/oracle.hpp"

#include <cmath>

namespace corrchan {

namespace {

void require_three_spins(const ExperimentParams& params) {
  if (params.bath_spins != 3)
    throw std::invalid_argument("closed forms are specific to the three-spin bath");
}

// sin of a Hermitian superoperator matrix via eigendecomposition.
Mat matrix_sine(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(m);
  const Eigen::VectorXd& ev = es.eigenvalues();
  Eigen::VectorXd s(ev.size());
  for (int i = 0; i < ev.size(); ++i) s(i) = std::sin(ev(i));
  return es.eigenvectors() * s.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

double correlation(const OrderingSequence& eta, const std::vector<double>& times,
                   const SystemModel& model) {
  const int n = eta.size();
  if (static_cast<int>(times.size()) != n)
    throw std::invalid_argument("correlation: times length must match sequence");
  for (int k = 1; k < n; ++k)
    if (times[k] < times[k - 1])
      throw std::invalid_argument("correlation: times must be nondecreasing");
  Mat rho = model.rho_B();
  for (int k = 0; k < n; ++k) {
    if (eta.entries[k] == 0) continue;
    const Mat bt = model.bath_operator_at(times[k]);
    if (eta.entries[k] > 0)
      rho = (bt * rho + rho * bt) / 2.0;
    else
      rho = -kI * (bt * rho - rho * bt) / 2.0;
  }
  const Complex tr = rho.trace();
  return std::real(tr);
}

double analytic_C_plus_minus(double tau21, const ExperimentParams& params) {
  require_three_spins(params);
  const double j = params.J();
  return 0.75 * j * j * params.p_H * std::sin(2.0 * M_PI * params.nu * tau21);
}

double analytic_C_pmmp(double tau21, double tau43, const ExperimentParams& params) {
  require_three_spins(params);
  const double j = params.J();
  return (3.0 / 16.0) * j * j * j * j * std::sin(2.0 * M_PI * params.nu * tau21) *
         std::sin(2.0 * M_PI * params.nu * tau43);
}

double analytic_C_p00p(double tau41, const ExperimentParams& params) {
  require_three_spins(params);
  const double j = params.J();
  return 0.75 * j * j * std::cos(2.0 * M_PI * params.nu * tau41);
}

double coefficient_A(const std::vector<SynthesizedChannel>& channels,
                     const OrderingSequence& eta, const Mat& rho_S,
                     const Mat& observable) {
  const int n = eta.size();
  if (static_cast<int>(channels.size()) != n)
    throw std::invalid_argument("coefficient_A: channel count must match sequence");
  const BasisPtr basis = OperatorBasis::pauli();
  static const Mat s_minus = comm_superop(pauli_z() / 2.0, OperatorBasis::pauli()).matrix;
  static const Mat s_plus =
      anticomm_superop(pauli_z() / 2.0, OperatorBasis::pauli()).matrix;
  Vec v = vectorize(rho_S, *basis);
  for (int k = 0; k < n; ++k) {
    v = channels[k].matrix.matrix * v;
    // Bath anticommutator (+) pairs with the sensor commutator, and the bath
    // commutator (-) with the sensor anticommutator.
    if (eta.entries[k] > 0)
      v = s_minus * v;
    else if (eta.entries[k] < 0)
      v = s_plus * v;
  }
  Complex out{0.0, 0.0};
  for (int j = 0; j < 4; ++j) out += (observable * basis->element(j)).trace() * v(j);
  return std::pow(2.0, eta.theta()) * std::real(out);
}

double exact_S2(double delta_t, double t1, double t2, const SystemModel& model) {
  if (delta_t <= 0) throw std::invalid_argument("exact_S2: delta_t must be positive");
  const BasisPtr basis = OperatorBasis::matrix_units(model.bath_dim());
  const Mat b2 = model.bath_operator_at(t2);
  const Mat b1 = model.bath_operator_at(t1);
  // dt B^+ and i dt B^- are Hermitian superoperators, so the sines are exact.
  const Mat plus2 = delta_t * anticomm_superop(b2, basis).matrix;
  const Mat iminus1 = delta_t * kI * comm_superop(b1, basis).matrix;
  const Vec v = matrix_sine(plus2) * (matrix_sine(iminus1) * vectorize(model.rho_B(), *basis));
  const Complex tr = unvectorize(v, *basis).trace();
  return std::real(-kI * tr);
}

double exact_S4(double delta_t, const std::array<double, 4>& times,
                const SystemModel& model, double p_C) {
  if (delta_t <= 0) throw std::invalid_argument("exact_S4: delta_t must be positive");
  const BasisPtr basis = OperatorBasis::matrix_units(model.bath_dim());
  auto sine_plus = [&](double t) {
    return matrix_sine(delta_t * anticomm_superop(model.bath_operator_at(t), basis).matrix);
  };
  auto sine_iminus = [&](double t) {
    return matrix_sine(Mat(delta_t * kI *
                           comm_superop(model.bath_operator_at(t), basis).matrix));
  };
  Vec v = vectorize(model.rho_B(), *basis);
  v = sine_plus(times[0]) * v;
  v = sine_iminus(times[1]) * v;
  v = sine_iminus(times[2]) * v;
  v = sine_plus(times[3]) * v;
  const Complex tr = unvectorize(v, *basis).trace();
  return std::real(-p_C * tr);
}

double predicted_signal(const std::vector<SynthesizedChannel>& channels,
                        const SystemModel& model, const std::vector<double>& times,
                        double delta_t, int max_order) {
  const int n = static_cast<int>(channels.size());
  if (static_cast<int>(times.size()) != n)
    throw std::invalid_argument("predicted_signal: times length must match channels");
  if (n > 6) throw std::invalid_argument("predicted_signal: N capped at 6");
  if (max_order > 2 * n)
    throw std::invalid_argument("predicted_signal: max_order above 2N");
  long long total = 1;
  for (int k = 0; k < n; ++k) total *= 3;
  double sum = 0.0;
  for (long long flat = 0; flat < total; ++flat) {
    OrderingSequence eta;
    long long rem = flat;
    for (int k = 0; k < n; ++k) {
      const int code = static_cast<int>(rem % 3);
      rem /= 3;
      eta.entries.push_back(code == 2 ? -1 : code);
    }
    const int theta = eta.theta();
    if (theta > max_order) continue;
    if (vanishing_correlation(eta)) continue;
    const double a = coefficient_A(channels, eta, model.rho_S(), pauli_y());
    if (std::abs(a) < 1e-14) continue;
    sum += std::pow(delta_t, theta) * a * correlation(eta, times, model);
  }
  return sum;
}

LeakageSplit leakage_signal(double delta_theta, int n, double delta_t,
                            const std::array<double, 4>& times,
                            const ExperimentParams& params) {
  if (n < 1) throw std::invalid_argument("leakage_signal: n must be >= 1");
  const double c3 = std::pow(1.0 - delta_theta * delta_theta / 2.0, 3);
  LeakageSplit out;
  out.main = params.p_C * c3 * std::pow(delta_t, 4) *
             analytic_C_pmmp(times[1] - times[0], times[3] - times[2], params);
  out.leakage = params.p_C * std::pow(-delta_theta, n) * delta_t * delta_t *
                analytic_C_p00p(times[3] - times[0], params);
  return out;
}

}  // namespace corrchan
