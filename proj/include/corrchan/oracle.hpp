#ifndef CORRCHAN_ORACLE_HPP
#define CORRCHAN_ORACLE_HPP

#include <array>
#include <vector>

#include "corrchan/ordering.hpp"
#include "corrchan/synthesis.hpp"
#include "corrchan/system.hpp"

namespace corrchan {

/// Direct bath-side correlation Tr_B(B^{eta_N} ... B^{eta_1} rho_B) with the
/// earliest selector applied first; eta = 0 slots apply the identity. The
/// selectors are the half-normalized maps B^+ X = {B(t), X}/2 and
/// B^- X = -i[B(t), X]/2.
double correlation(const OrderingSequence& eta, const std::vector<double>& times,
                   const SystemModel& model);

/// Closed forms for the three orderings the protocols use; valid for the
/// three-spin bath only.
double analytic_C_plus_minus(double tau21, const ExperimentParams& params);
double analytic_C_pmmp(double tau21, double tau43, const ExperimentParams& params);
double analytic_C_p00p(double tau41, const ExperimentParams& params);

/// Sensor-side coefficient A = 2^Theta Tr_S[O prod_k (S^{flip(eta_k)} P_k) rho_S]
/// where a bath anticommutator (+) pairs with the sensor commutator of
/// sigma_z/2 and vice versa. eta is the bath-side ordering sequence.
double coefficient_A(const std::vector<SynthesizedChannel>& channels,
                     const OrderingSequence& eta, const Mat& rho_S,
                     const Mat& observable);

/// Non-perturbative signal formulas via matrix sines of the Hermitian bath
/// superoperators dt B^+(t) and i dt B^-(t).
double exact_S2(double delta_t, double t1, double t2, const SystemModel& model);
double exact_S4(double delta_t, const std::array<double, 4>& times,
                const SystemModel& model, double p_C);

/// Truncated signal prediction: sum over all eta sequences with theta up to
/// max_order of dt^theta A(eta) C(eta) with sigma_y readout on rho_S.
double predicted_signal(const std::vector<SynthesizedChannel>& channels,
                        const SystemModel& model, const std::vector<double>& times,
                        double delta_t, int max_order);

/// Leading-order terms of the robust fourth-order signal with pulse error:
/// main = p_C (1 - dtheta^2/2)^3 dt^4 C^{+--+}, leakage = p_C (-dtheta)^n
/// dt^2 C^{+00+}. times are the four window start times, earliest first.
struct LeakageSplit {
  double main = 0.0;
  double leakage = 0.0;
};
LeakageSplit leakage_signal(double delta_theta, int n, double delta_t,
                            const std::array<double, 4>& times,
                            const ExperimentParams& params);

}  // namespace corrchan

#endif
