#ifndef CORRCHAN_CONFIG_HPP
#define CORRCHAN_CONFIG_HPP

#include <stdexcept>
#include <string>

#include "corrchan/errors.hpp"
#include "corrchan/protocol.hpp"
#include "corrchan/system.hpp"

namespace corrchan {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Everything a run needs, parsed from a sectioned key = value file.
/// Unknown sections or keys are rejected, not ignored.
struct RunConfig {
  ExperimentParams experiment;
  ErrorParams errors;

  std::string protocol = "second";  // second | fourth | custom
  std::string channel_file;         // custom protocol: one channel per slot file
  double tau_start = 0.0;           // s, sweep axis start
  double tau_step = 2e-6;           // s
  int tau_points = 40;
  double tau32 = 1e-5;              // s, fixed inner delays of the fourth order
  double tau43 = 1e-5;
  CouplingMode coupling_mode = CouplingMode::CouplingOnly;
  bool add_noise = false;           // inject readout noise into the sweep CSV

  std::string output;               // CSV path; empty = stdout

  void validate() const;
  std::vector<double> tau_grid() const;
};

RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

/// Canonical full rendering; parse_config_text(format_config(c)) round-trips
/// every field. Also embedded as metadata in output files.
std::string format_config(const RunConfig& config);

}  // namespace corrchan

#endif
