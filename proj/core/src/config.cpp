#include "noma/config.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include "noma/errors.hpp"
#include "noma/units.hpp"

namespace noma {

LinkBudget link_budget(const NetworkConfig& cfg) {
  LinkBudget lb;
  lb.noise_w_per_rb = dbm_to_watt(cfg.noise_psd) * cfg.rb_bandwidth;
  lb.p_ue_max_w = dbm_to_watt(cfg.p_ue_max);
  lb.rb_bandwidth = cfg.rb_bandwidth;
  return lb;
}

double normalized_noise(const LinkBudget& lb, double theta) {
  if (theta <= 0.0) throw zero_bandwidth_error();
  return lb.noise_w_per_rb * theta / lb.p_ue_max_w;
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

double parse_num(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw error("bad value for config key '" + key + "': " + value);
  }
}

}  // namespace

void apply_config_line(NetworkConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "area_side") cfg.area_side = parse_num(key, value);
  else if (key == "num_sbs") cfg.num_sbs = static_cast<int>(parse_num(key, value));
  else if (key == "num_ue") cfg.num_ue = static_cast<int>(parse_num(key, value));
  else if (key == "pathloss_exponent") cfg.pathloss_exponent = parse_num(key, value);
  else if (key == "shadowing_stddev") cfg.shadowing_stddev = parse_num(key, value);
  else if (key == "antenna_constant") cfg.antenna_constant = parse_num(key, value);
  else if (key == "noise_psd") cfg.noise_psd = parse_num(key, value);
  else if (key == "rb_bandwidth") cfg.rb_bandwidth = parse_num(key, value);
  else if (key == "num_rbs") cfg.num_rbs = parse_num(key, value);
  else if (key == "p_ue_max") cfg.p_ue_max = parse_num(key, value);
  else if (key == "p_sbs") cfg.p_sbs = parse_num(key, value);
  else if (key == "p_mbs") cfg.p_mbs = parse_num(key, value);
  else if (key == "bias") cfg.bias = parse_num(key, value);
  else if (key == "fef") cfg.fef = parse_num(key, value);
  else if (key == "max_cluster_size") cfg.max_cluster_size = static_cast<int>(parse_num(key, value));
  else if (key == "alpha") cfg.alpha = parse_num(key, value);
  else if (key == "qos_mean") cfg.qos_mean = parse_num(key, value);
  else if (key == "sensitivity_db") cfg.sensitivity_db = parse_num(key, value);
  else if (key == "rng_seed") cfg.rng_seed = static_cast<std::uint64_t>(parse_num(key, value));
  else throw error("unknown config key: " + key);
}

NetworkConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open config file: " + path);
  NetworkConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      std::ostringstream os;
      os << "config parse error at " << path << ":" << lineno << " (expected key = value)";
      throw error(os.str());
    }
    apply_config_line(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

}  // namespace noma
