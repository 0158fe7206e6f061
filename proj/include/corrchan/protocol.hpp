#ifndef CORRCHAN_PROTOCOL_HPP
#define CORRCHAN_PROTOCOL_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "corrchan/synthesis.hpp"
#include "corrchan/system.hpp"

namespace corrchan {

/// Whether the bath drive H_B also acts during the coupling windows. In
/// coupling-only mode the bath is frozen while the sensor couples, so the
/// effective correlation times are set by the free-evolution delays alone.
enum class CouplingMode { CouplingOnly, CouplingPlusBathDrive };

struct ProtocolSlot {
  SynthesizedChannel channel;
  double coupling_window = 5e-4;       // s
  double free_evolution_after = 0.0;   // s
};

struct ProtocolSpec {
  SystemModel model;
  std::vector<ProtocolSlot> slots;
  Mat observable;  // sensor operator, defaults to sigma_y when empty
  CouplingMode coupling_mode = CouplingMode::CouplingOnly;
};

/// Propagates rho_S (x) rho_B through the slot sequence (channel on the
/// sensor, coupled window, free evolution) and returns Tr[(O (x) 1) rho].
/// Channels are applied through their cached summed matrix; by linearity
/// this equals the phase-cycled weighted sum of per-term runs.
double run(const ProtocolSpec& spec);

/// Same signal computed the experimental way: one propagation per element
/// of the Cartesian product of channel terms, combined with the product of
/// weights. Exponential in slot count; used to assert linearity.
double run_phase_cycled(const ProtocolSpec& spec);

ProtocolSpec second_order_protocol(const ExperimentParams& params, double tau21);
ProtocolSpec fourth_order_protocol(const ExperimentParams& params, double tau21,
                                   double tau32, double tau43, int n = 1,
                                   double delta_theta = 0.0);

struct SweepResult {
  std::vector<double> axis;
  std::vector<double> signals;
  std::map<std::string, std::string> metadata;
};

SweepResult sweep(const std::function<ProtocolSpec(double)>& builder,
                  const std::vector<double>& axis);

struct PowerLawFit {
  double exponent = 0.0;
  double residual = 0.0;  // rms log-domain misfit
  int excluded = 0;       // points dropped for non-positive magnitude
};

/// Least-squares slope of log|signal| versus log(axis). The axis may be
/// delta_t in seconds or the dimensionless J delta_t; the exponent is the
/// same either way.
PowerLawFit fit_power_law(const std::vector<double>& axis,
                          const std::vector<double>& signals);

/// Fourth-order signal on a tau21 x tau43 grid at fixed tau32.
Eigen::MatrixXd sweep_2d(const ExperimentParams& params,
                         const std::vector<double>& tau21s,
                         const std::vector<double>& tau43s, double tau32,
                         int n = 1, double delta_theta = 0.0,
                         CouplingMode mode = CouplingMode::CouplingOnly);

struct SpectralPeak {
  double fx = 0.0;  // Hz, in (-fs/2, fs/2]
  double fy = 0.0;
  double magnitude = 0.0;
};

struct SpectralDensity {
  Eigen::MatrixXd magnitude;  // unshifted DFT bins
  std::vector<double> fx, fy; // signed bin frequencies in Hz
  std::vector<SpectralPeak> peaks;  // sorted by descending magnitude
  double power_signal = 0.0;        // sum |s|^2
  double power_spectrum = 0.0;      // sum |S|^2 / (M N), Parseval partner
};

/// Direct 2D discrete Fourier transform of a uniformly sampled grid with
/// sample step `step` seconds on both axes.
SpectralDensity spectral_density(const Eigen::MatrixXd& signal, double step);

}  // namespace corrchan

#endif
