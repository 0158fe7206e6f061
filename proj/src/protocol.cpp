#include "corrchan/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace corrchan {

namespace {

struct SlotStep {
  Mat process;       // 4x4 process matrix of the sensor map for this slot
  double window = 0.0;
  double tau = 0.0;
};

// Joint Schrodinger-picture propagation: per slot apply the sensor map
// through Kraus-basis sandwiches (sigma_n (x) 1) rho (sigma_m (x) 1)^dag / 2,
// then the coupled window, then free bath evolution. The initial bath state
// commutes with H_B, so the free delays reproduce the interaction-picture
// correlation times exactly.
double propagate(const SystemModel& model, const std::vector<SlotStep>& steps,
                 const Mat& observable, CouplingMode mode) {
  const int bd = model.bath_dim();
  Mat rho = kron(model.rho_S(), model.rho_B());
  std::vector<Mat> kraus;
  for (const Mat& s : pauli_ops()) kraus.push_back(kron(s, identity(bd)));
  Mat h_window = model.V();
  if (mode == CouplingMode::CouplingPlusBathDrive)
    h_window += model.bath_embed(model.H_B());
  for (const SlotStep& step : steps) {
    Mat mapped = Mat::Zero(rho.rows(), rho.cols());
    for (int n = 0; n < 4; ++n)
      for (int m = 0; m < 4; ++m) {
        const Complex c = step.process(n, m);
        if (std::abs(c) < 1e-16) continue;
        mapped += (0.5 * c) * (kraus[n] * rho * kraus[m].adjoint());
      }
    rho = std::move(mapped);
    if (step.window != 0.0) {
      const Mat u = expm(h_window, -kI * step.window);
      rho = u * rho * u.adjoint();
    }
    if (step.tau != 0.0) {
      const Mat uf = model.bath_embed(expm(model.H_B(), -kI * step.tau));
      rho = uf * rho * uf.adjoint();
    }
  }
  return (model.sensor_embed(observable) * rho).trace().real();
}

Mat effective_observable(const ProtocolSpec& spec) {
  if (spec.observable.size() == 0) return pauli_y();
  if (spec.observable.rows() != 2 || spec.observable.cols() != 2)
    throw std::invalid_argument("observable must be a 2x2 sensor operator");
  return spec.observable;
}

void validate_spec(const ProtocolSpec& spec) {
  if (spec.slots.empty()) throw std::invalid_argument("protocol has no slots");
  for (const ProtocolSlot& s : spec.slots) {
    if (s.coupling_window < 0.0 || s.free_evolution_after < 0.0)
      throw std::invalid_argument("negative protocol durations");
    if (s.channel.matrix.matrix.rows() != 4)
      throw std::invalid_argument("slot channel is not a sensor map");
  }
}

}  // namespace

double run(const ProtocolSpec& spec) {
  validate_spec(spec);
  std::vector<SlotStep> steps;
  for (const ProtocolSlot& s : spec.slots)
    steps.push_back({process_matrix(s.channel.matrix), s.coupling_window,
                     s.free_evolution_after});
  return propagate(spec.model, steps, effective_observable(spec),
                   spec.coupling_mode);
}

double run_phase_cycled(const ProtocolSpec& spec) {
  validate_spec(spec);
  const Mat obs = effective_observable(spec);
  const int n_slots = static_cast<int>(spec.slots.size());
  std::vector<SlotStep> steps(n_slots);
  for (int k = 0; k < n_slots; ++k) {
    steps[k].window = spec.slots[k].coupling_window;
    steps[k].tau = spec.slots[k].free_evolution_after;
  }
  double total = 0.0;
  // One propagation per element of the Cartesian product of channel terms.
  std::function<void(int, double)> recurse = [&](int slot, double weight) {
    if (slot == n_slots) {
      total += weight * propagate(spec.model, steps, obs, spec.coupling_mode);
      return;
    }
    for (const auto& [w, op] : spec.slots[slot].channel.terms) {
      steps[slot].process = process_matrix(op.superop());
      recurse(slot + 1, weight * w);
    }
  };
  recurse(0, 1.0);
  return total;
}

ProtocolSpec second_order_protocol(const ExperimentParams& params, double tau21) {
  params.validate();
  if (tau21 < 0.0) throw std::invalid_argument("tau21 must be nonnegative");
  const auto [p1, p2] = second_order_channels();
  ProtocolSpec spec;
  spec.model = SystemModel::build(params);
  spec.slots = {{p1, params.delta_t, tau21}, {p2, params.delta_t, 0.0}};
  spec.observable = pauli_y();
  return spec;
}

ProtocolSpec fourth_order_protocol(const ExperimentParams& params, double tau21,
                                   double tau32, double tau43, int n,
                                   double delta_theta) {
  params.validate();
  if (tau21 < 0.0 || tau32 < 0.0 || tau43 < 0.0)
    throw std::invalid_argument("delays must be nonnegative");
  auto c4 = fourth_order_channels();
  if (n != 1 || delta_theta != 0.0) c4[2] = robust_repeat(delta_theta, n);
  ProtocolSpec spec;
  spec.model = SystemModel::build(params);
  spec.slots = {{c4[0], params.delta_t, tau21},
                {c4[1], params.delta_t, tau32},
                {c4[2], params.delta_t, tau43},
                {c4[3], params.delta_t, 0.0}};
  spec.observable = pauli_y();
  return spec;
}

SweepResult sweep(const std::function<ProtocolSpec(double)>& builder,
                  const std::vector<double>& axis) {
  SweepResult out;
  out.axis = axis;
  out.signals.reserve(axis.size());
  for (const double a : axis) out.signals.push_back(run(builder(a)));
  return out;
}

PowerLawFit fit_power_law(const std::vector<double>& axis,
                          const std::vector<double>& signals) {
  if (axis.size() != signals.size())
    throw std::invalid_argument("axis/signal length mismatch");
  std::vector<double> lx, ly;
  int excluded = 0;
  for (size_t i = 0; i < axis.size(); ++i) {
    if (axis[i] <= 0.0 || std::abs(signals[i]) <= 0.0) {
      ++excluded;
      continue;
    }
    lx.push_back(std::log(axis[i]));
    ly.push_back(std::log(std::abs(signals[i])));
  }
  const int n = static_cast<int>(lx.size());
  if (n < 2) throw std::invalid_argument("need at least two usable points");
  double mx = 0.0, my = 0.0;
  for (int i = 0; i < n; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("axis values are all equal");
  PowerLawFit fit;
  fit.exponent = sxy / sxx;
  fit.excluded = excluded;
  const double intercept = my - fit.exponent * mx;
  double ss = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = ly[i] - (intercept + fit.exponent * lx[i]);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

Eigen::MatrixXd sweep_2d(const ExperimentParams& params,
                         const std::vector<double>& tau21s,
                         const std::vector<double>& tau43s, double tau32,
                         int n, double delta_theta, CouplingMode mode) {
  Eigen::MatrixXd out(static_cast<int>(tau21s.size()),
                      static_cast<int>(tau43s.size()));
  for (size_t i = 0; i < tau21s.size(); ++i)
    for (size_t j = 0; j < tau43s.size(); ++j) {
      ProtocolSpec spec = fourth_order_protocol(params, tau21s[i], tau32,
                                                tau43s[j], n, delta_theta);
      spec.coupling_mode = mode;
      out(static_cast<int>(i), static_cast<int>(j)) = run(spec);
    }
  return out;
}

SpectralDensity spectral_density(const Eigen::MatrixXd& signal, double step) {
  const int m = static_cast<int>(signal.rows());
  const int n = static_cast<int>(signal.cols());
  if (m == 0 || n == 0) throw std::invalid_argument("empty signal grid");
  if (step <= 0.0) throw std::invalid_argument("sample step must be positive");
  auto dft_matrix = [](int size) {
    Mat f(size, size);
    for (int p = 0; p < size; ++p)
      for (int q = 0; q < size; ++q)
        f(p, q) = std::exp(-2.0 * M_PI * kI * double(p) * double(q) / double(size));
    return f;
  };
  const Mat s = dft_matrix(m) * signal.cast<Complex>() * dft_matrix(n).transpose();

  SpectralDensity out;
  out.magnitude = s.cwiseAbs();
  auto bin_freq = [step](int p, int size) {
    const int signed_bin = (2 * p > size) ? p - size : p;
    return signed_bin / (size * step);
  };
  out.fx.resize(m);
  out.fy.resize(n);
  for (int p = 0; p < m; ++p) out.fx[p] = bin_freq(p, m);
  for (int q = 0; q < n; ++q) out.fy[q] = bin_freq(q, n);

  out.power_signal = signal.squaredNorm();
  out.power_spectrum = s.squaredNorm() / (double(m) * double(n));

  // Peaks are bins strictly above all eight periodic neighbours.
  const Eigen::MatrixXd& mag = out.magnitude;
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < n; ++q) {
      bool peak = mag(p, q) > 0.0;
      for (int dp = -1; dp <= 1 && peak; ++dp)
        for (int dq = -1; dq <= 1 && peak; ++dq) {
          if (dp == 0 && dq == 0) continue;
          const int pp = (p + dp + m) % m;
          const int qq = (q + dq + n) % n;
          if (!(mag(p, q) > mag(pp, qq))) peak = false;
        }
      if (peak) out.peaks.push_back({out.fx[p], out.fy[q], mag(p, q)});
    }
  std::sort(out.peaks.begin(), out.peaks.end(),
            [](const SpectralPeak& a, const SpectralPeak& b) {
              return a.magnitude > b.magnitude;
            });
  return out;
}

}  // namespace corrchan
