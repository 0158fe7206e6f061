// Command line front end: channel synthesis, protocol sweeps, error budgets
// and correlation oracle queries, with CSV output.
//
// Exit codes: 0 success, 2 configuration/usage error, 3 verification
// failure, 4 I/O failure.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "corrchan/config.hpp"
#include "corrchan/csv.hpp"
#include "corrchan/errors.hpp"
#include "corrchan/oracle.hpp"
#include "corrchan/protocol.hpp"
#include "corrchan/reference.hpp"
#include "corrchan/synthesis.hpp"

using namespace corrchan;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitVerify = 3;
constexpr int kExitIo = 4;

void emit(const CsvTable& table, const std::string& path) {
  if (path.empty())
    std::cout << format_csv(table);
  else
    write_csv_atomic(path, table);
}

std::vector<std::string> config_comments(const RunConfig& config) {
  std::vector<std::string> out;
  std::istringstream in(format_config(config));
  std::string line;
  while (std::getline(in, line)) out.push_back("config: " + line);
  return out;
}

Mat read_liouville_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open matrix file: " + path);
  Mat m(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      std::complex<double> v;
      if (!(in >> v))
        throw ConfigError("matrix file needs 16 entries, real or (re,im)");
      m(i, j) = v;
    }
  return m;
}

int run_synthesize_target(const Mat& target, const std::string& name,
                          const std::string& output) {
  const WeightSolution sol =
      decompose(SuperOperator{2, target, OperatorBasis::pauli()});
  const auto& ops = catalog_operations();
  CsvTable table;
  table.comments = {"expansion of " + name + " over the operation catalog",
                    "residual = " + format_double(sol.residual)};
  std::vector<double> row;
  for (int i = 0; i < 16; ++i) {
    table.header.push_back(ops[size_t(i)].label());
    row.push_back(sol.weights(i));
  }
  table.header.push_back("residual");
  row.push_back(sol.residual);
  table.rows.push_back(row);
  emit(table, output);
  if (output.empty()) {
    for (int i = 0; i < 16; ++i)
      std::printf("%-8s %+.17g\n", ops[size_t(i)].label().c_str(),
                  sol.weights(i));
    std::printf("residual %.3e\n", sol.residual);
  }
  return sol.residual < 1e-10 ? kExitOk : kExitVerify;
}

int run_verify_table() {
  double worst = 0.0;
  for (const auto& row : refdata::kSparseExpansions) {
    const Mat target = sparse_element(row.element);
    const WeightSolution sol =
        decompose(SuperOperator{2, target, OperatorBasis::pauli()});
    double dev = sol.residual;
    for (int i = 0; i < 16; ++i)
      dev = std::max(dev, std::abs(sol.weights(i) - row.weights[size_t(i)]));
    worst = std::max(worst, dev);
    std::printf("%-4s max deviation %.3e %s\n", row.element, dev,
                dev < 1e-10 ? "ok" : "FAIL");
  }
  std::printf("worst deviation %.3e\n", worst);
  return worst < 1e-10 ? kExitOk : kExitVerify;
}

std::vector<ProtocolSlot> custom_slots(const RunConfig& config) {
  std::ifstream in(config.channel_file);
  if (!in) throw IoError("cannot open channel file: " + config.channel_file);
  std::vector<ProtocolSlot> slots;
  std::string line, block;
  auto flush = [&] {
    if (block.find_first_not_of(" \t\r\n") == std::string::npos) return;
    slots.push_back({parse_channel(block), config.experiment.delta_t, 0.0});
    block.clear();
  };
  while (std::getline(in, line)) {
    if (line.rfind("---", 0) == 0) {
      flush();
      continue;
    }
    block += line + "\n";
  }
  flush();
  if (slots.empty()) throw ConfigError("channel file defines no slots");
  return slots;
}

ProtocolSpec spec_for(const RunConfig& config, double tau) {
  ProtocolSpec spec;
  if (config.protocol == "second") {
    spec = second_order_protocol(config.experiment, tau);
  } else if (config.protocol == "fourth") {
    spec = fourth_order_protocol(config.experiment, tau, config.tau32,
                                 config.tau43, config.experiment.n_repeat,
                                 config.errors.delta_theta);
  } else {
    spec.model = SystemModel::build(config.experiment);
    spec.slots = custom_slots(config);
    spec.slots.front().free_evolution_after = tau;  // swept delay
  }
  spec.coupling_mode = config.coupling_mode;
  return spec;
}

int run_simulate(const RunConfig& config, bool two_dim) {
  const auto grid = config.tau_grid();
  const ExperimentParams& p = config.experiment;

  if (two_dim) {
    if (config.protocol != "fourth")
      throw ConfigError("--2d requires protocol = fourth");
    const Eigen::MatrixXd sig =
        sweep_2d(p, grid, grid, config.tau32, p.n_repeat,
                 config.errors.delta_theta, config.coupling_mode);
    CsvTable table;
    table.comments = config_comments(config);
    table.comments.push_back("rows: tau21, columns: tau43");
    table.header.push_back("tau21");
    for (double t : grid) table.header.push_back("s" + format_double(t));
    for (int i = 0; i < sig.rows(); ++i) {
      std::vector<double> row{grid[size_t(i)]};
      for (int j = 0; j < sig.cols(); ++j) row.push_back(sig(i, j));
      table.rows.push_back(row);
    }
    emit(table, config.output);

    const SpectralDensity sd = spectral_density(sig, config.tau_step);
    CsvTable spec;
    spec.comments = config_comments(config);
    for (size_t k = 0; k < sd.peaks.size() && k < 8; ++k)
      spec.comments.push_back(
          "peak: fx = " + format_double(sd.peaks[k].fx) +
          " Hz, fy = " + format_double(sd.peaks[k].fy) +
          " Hz, magnitude = " + format_double(sd.peaks[k].magnitude));
    spec.comments.push_back("parseval: signal power " +
                            format_double(sd.power_signal) + ", spectrum " +
                            format_double(sd.power_spectrum));
    spec.header.push_back("fx");
    for (double f : sd.fy) spec.header.push_back("m" + format_double(f));
    for (int i = 0; i < sd.magnitude.rows(); ++i) {
      std::vector<double> row{sd.fx[size_t(i)]};
      for (int j = 0; j < sd.magnitude.cols(); ++j)
        row.push_back(sd.magnitude(i, j));
      spec.rows.push_back(row);
    }
    emit(spec, config.output.empty() ? "" : config.output + ".spectrum.csv");
    return kExitOk;
  }

  std::vector<double> signals;
  for (double tau : grid) signals.push_back(run(spec_for(config, tau)));
  if (config.add_noise) {
    const double sigma = config.errors.readout_sigma > 0.0
                             ? config.errors.readout_sigma
                             : default_readout_sigma(
                                   config.protocol == "fourth" ? 4 : 2);
    signals = add_readout_noise(signals, sigma, config.errors.seed);
  }

  CsvTable table;
  table.comments = config_comments(config);
  table.header = {"tau", "signal"};
  for (size_t i = 0; i < grid.size(); ++i)
    table.rows.push_back({grid[i], signals[i]});
  emit(table, config.output);

  // Companion file: oracle target values and the relative deviation, when a
  // closed-form target exists for this protocol.
  if (config.protocol == "custom") return kExitOk;
  std::vector<double> target;
  for (double tau : grid)
    target.push_back(config.protocol == "second"
                         ? p.delta_t * p.delta_t * analytic_C_plus_minus(tau, p)
                         : std::pow(p.delta_t, 4) * p.p_C *
                               analytic_C_pmmp(tau, config.tau43, p));
  const DeviationMetrics dm = deviation_metrics(signals, target);
  CsvTable companion;
  companion.comments = config_comments(config);
  companion.comments.push_back("relative deviation from target = " +
                               format_double(dm.relative));
  companion.header = {"tau", "signal", "target", "absolute_error"};
  for (size_t i = 0; i < grid.size(); ++i)
    companion.rows.push_back({grid[i], signals[i], target[i], dm.absolute[i]});
  emit(companion, config.output.empty() ? "" : config.output + ".target.csv");
  return kExitOk;
}

int run_budget(const RunConfig& config, int theta) {
  const BudgetInputs in = budget_inputs(config.experiment, theta,
                                        config.tau_grid());
  const double sigma = config.errors.readout_sigma > 0.0
                           ? config.errors.readout_sigma
                           : default_readout_sigma(theta);
  ErrorParams ep = config.errors;
  ep.readout_sigma = sigma;
  const double dt_opt =
      optimal_dt(theta, in.next_order.norm(),
                 sigma * std::sqrt(double(in.target.size())));

  CsvTable table;
  table.comments = config_comments(config);
  table.comments.push_back("theta = " + std::to_string(theta));
  table.comments.push_back("optimal delta_t = " + format_double(dt_opt) + " s");
  table.header = {"delta_t", "truncation", "readout", "pulse", "evolution",
                  "total"};
  double best_dt = 0.0, best_total = 0.0;
  for (int i = 0; i < 40; ++i) {
    // log spaced 0.05 ms .. 2 ms
    const double dt = 5e-5 * std::pow(40.0, i / 39.0);
    const ErrorBudget b = total_error(dt, in, ep);
    table.rows.push_back(
        {dt, b.truncation, b.readout, b.pulse, b.evolution, b.total});
    if (best_dt == 0.0 || b.total < best_total) {
      best_dt = dt;
      best_total = b.total;
    }
  }
  table.comments.push_back("grid minimizer = " + format_double(best_dt) + " s");
  emit(table, config.output);
  if (!config.output.empty())
    std::printf("optimal delta_t %.6g s (grid minimizer %.6g s)\n", dt_opt,
                best_dt);
  return kExitOk;
}

int run_oracle(const std::string& eta_str, const std::vector<double>& times,
               const ExperimentParams& params) {
  const OrderingSequence eta = OrderingSequence::parse(eta_str);
  if (int(times.size()) != eta.size())
    throw ConfigError("need one time per selector");
  const SystemModel model = SystemModel::build(params);
  const double value = correlation(eta, times, model);
  std::printf("C^{%s} = %.17g\n", eta_str.c_str(), value);
  if (eta_str == "+-" && times.size() == 2)
    std::printf("closed form = %.17g\n",
                analytic_C_plus_minus(times[1] - times[0], params));
  else if (eta_str == "+--+" && times.size() == 4)
    std::printf("closed form = %.17g\n",
                analytic_C_pmmp(times[1] - times[0], times[3] - times[2],
                                params));
  else if (eta_str == "+00+" && times.size() == 4)
    std::printf("closed form = %.17g\n",
                analytic_C_p00p(times[3] - times[0], params));
  if (vanishing_correlation(eta))
    std::printf("vanishes identically (leading commutator)\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthesized-channel correlation extraction toolkit"};
  app.require_subcommand(1);

  auto* synth = app.add_subcommand(
      "synthesize", "Expand a sensor Liouville map over the operation catalog");
  std::string element, matrix_file, synth_output;
  bool synth_verify = false;
  synth->add_option("--element", element,
                    "named sparse element, e.g. Pxx (row P, columns 0xyz)");
  synth->add_option("--matrix-file", matrix_file,
                    "file with 16 entries of a 4x4 Liouville matrix");
  synth->add_option("--output", synth_output, "CSV output path");
  synth->add_flag("--verify-table2", synth_verify,
                  "check all 16 sparse-element expansions against the "
                  "reference weights");

  auto* sim = app.add_subcommand("simulate", "Run a protocol sweep");
  std::string sim_config;
  bool two_dim = false;
  sim->add_option("--config", sim_config, "run configuration file")->required();
  sim->add_flag("--2d", two_dim, "tau21 x tau43 grid plus spectral density");

  auto* bud = app.add_subcommand("budget", "Error budget versus delta_t");
  std::string bud_config;
  int theta = 2;
  bud->add_option("--config", bud_config, "run configuration file")->required();
  bud->add_option("--theta", theta, "correlation order, 2 or 4")
      ->check(CLI::IsMember({2, 4}));

  auto* orc = app.add_subcommand("oracle", "Evaluate a correlation ordering");
  std::string eta_str;
  std::vector<double> times;
  orc->add_option("eta", eta_str, "selector string, latest first, e.g. +--+")
      ->required();
  orc->add_option("times", times, "window start times in s, earliest first")
      ->required();

  auto* verify = app.add_subcommand(
      "verify-table2",
      "Verify the sixteen sparse-element expansions against the reference "
      "weights");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (synth->parsed()) {
      if (synth_verify) return run_verify_table();
      if (!element.empty())
        return run_synthesize_target(sparse_element(element), element,
                                     synth_output);
      if (!matrix_file.empty())
        return run_synthesize_target(read_liouville_matrix(matrix_file),
                                     matrix_file, synth_output);
      throw ConfigError("need --element, --matrix-file or --verify-table2");
    }
    if (verify->parsed()) return run_verify_table();
    if (sim->parsed()) return run_simulate(parse_config_file(sim_config), two_dim);
    if (bud->parsed()) return run_budget(parse_config_file(bud_config), theta);
    if (orc->parsed()) return run_oracle(eta_str, times, ExperimentParams{});
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const IoError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "invalid input: %s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  }
  return kExitOk;
}
