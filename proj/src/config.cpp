#include "corrchan/config.hpp"

#include <fstream>
#include <sstream>

namespace corrchan {

namespace {

std::string trim(const std::string& s) {
  const size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  size_t used = 0;
  double out;
  try {
    out = std::stod(v, &used);
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': not a number: " + v);
  }
  if (used != v.size()) throw ConfigError("key '" + key + "': not a number: " + v);
  return out;
}

int parse_int(const std::string& key, const std::string& v) {
  const double d = parse_double(key, v);
  const int i = static_cast<int>(d);
  if (double(i) != d) throw ConfigError("key '" + key + "': not an integer: " + v);
  return i;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ConfigError("key '" + key + "': not a boolean: " + v);
}

}  // namespace

void RunConfig::validate() const {
  experiment.validate();
  errors.validate();
  if (protocol != "second" && protocol != "fourth" && protocol != "custom")
    throw ConfigError("protocol must be second, fourth or custom");
  if (protocol == "custom" && channel_file.empty())
    throw ConfigError("custom protocol needs channel_file");
  if (tau_points < 1) throw ConfigError("tau_points must be >= 1");
  if (tau_step < 0.0 || tau_start < 0.0 || tau32 < 0.0 || tau43 < 0.0)
    throw ConfigError("sweep times must be >= 0");
}

std::vector<double> RunConfig::tau_grid() const {
  std::vector<double> g;
  for (int i = 0; i < tau_points; ++i) g.push_back(tau_start + i * tau_step);
  return g;
}

RunConfig parse_config_text(const std::string& text) {
  RunConfig c;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') {
      section = trim(line.substr(1, line.size() - 2));
      if (section != "experiment" && section != "errors" &&
          section != "sweep" && section != "output")
        throw ConfigError("unknown section [" + section + "]");
      continue;
    }
    const size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const std::string qual = section + "." + key;

    if (qual == "experiment.j_ch") c.experiment.J_CH = parse_double(key, value);
    else if (qual == "experiment.nu") c.experiment.nu = parse_double(key, value);
    else if (qual == "experiment.p_c") c.experiment.p_C = parse_double(key, value);
    else if (qual == "experiment.p_h") c.experiment.p_H = parse_double(key, value);
    else if (qual == "experiment.delta_t") c.experiment.delta_t = parse_double(key, value);
    else if (qual == "experiment.n_repeat") c.experiment.n_repeat = parse_int(key, value);
    else if (qual == "experiment.bath_spins") c.experiment.bath_spins = parse_int(key, value);
    else if (qual == "errors.delta_theta") c.errors.delta_theta = parse_double(key, value);
    else if (qual == "errors.k_decay") c.errors.k_decay = parse_double(key, value);
    else if (qual == "errors.readout_sigma") c.errors.readout_sigma = parse_double(key, value);
    else if (qual == "errors.gaussian_s") c.errors.gaussian_s = parse_double(key, value);
    else if (qual == "errors.seed")
      c.errors.seed = static_cast<unsigned long long>(parse_double(key, value));
    else if (qual == "sweep.protocol") c.protocol = value;
    else if (qual == "sweep.channel_file") c.channel_file = value;
    else if (qual == "sweep.tau_start") c.tau_start = parse_double(key, value);
    else if (qual == "sweep.tau_step") c.tau_step = parse_double(key, value);
    else if (qual == "sweep.tau_points") c.tau_points = parse_int(key, value);
    else if (qual == "sweep.tau32") c.tau32 = parse_double(key, value);
    else if (qual == "sweep.tau43") c.tau43 = parse_double(key, value);
    else if (qual == "sweep.coupling_mode") {
      if (value == "coupling-only") c.coupling_mode = CouplingMode::CouplingOnly;
      else if (value == "coupling-plus-bath-drive")
        c.coupling_mode = CouplingMode::CouplingPlusBathDrive;
      else throw ConfigError("unknown coupling_mode: " + value);
    }
    else if (qual == "sweep.add_noise") c.add_noise = parse_bool(key, value);
    else if (qual == "output.path") c.output = value;
    else throw ConfigError("unknown key '" + key + "' in section [" + section + "]");
  }
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return c;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

std::string format_config(const RunConfig& c) {
  std::ostringstream out;
  out.precision(17);
  out << "[experiment]\n"
      << "j_ch = " << c.experiment.J_CH << "\n"
      << "nu = " << c.experiment.nu << "\n"
      << "p_c = " << c.experiment.p_C << "\n"
      << "p_h = " << c.experiment.p_H << "\n"
      << "delta_t = " << c.experiment.delta_t << "\n"
      << "n_repeat = " << c.experiment.n_repeat << "\n"
      << "bath_spins = " << c.experiment.bath_spins << "\n"
      << "[errors]\n"
      << "delta_theta = " << c.errors.delta_theta << "\n"
      << "k_decay = " << c.errors.k_decay << "\n"
      << "readout_sigma = " << c.errors.readout_sigma << "\n"
      << "gaussian_s = " << c.errors.gaussian_s << "\n"
      << "seed = " << c.errors.seed << "\n"
      << "[sweep]\n"
      << "protocol = " << c.protocol << "\n";
  if (!c.channel_file.empty()) out << "channel_file = " << c.channel_file << "\n";
  out << "tau_start = " << c.tau_start << "\n"
      << "tau_step = " << c.tau_step << "\n"
      << "tau_points = " << c.tau_points << "\n"
      << "tau32 = " << c.tau32 << "\n"
      << "tau43 = " << c.tau43 << "\n"
      << "coupling_mode = "
      << (c.coupling_mode == CouplingMode::CouplingOnly
              ? "coupling-only"
              : "coupling-plus-bath-drive")
      << "\n"
      << "add_noise = " << (c.add_noise ? "true" : "false") << "\n";
  if (!c.output.empty()) out << "[output]\npath = " << c.output << "\n";
  return out.str();
}

}  // namespace corrchan
