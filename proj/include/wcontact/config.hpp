#pragma once

// Flat key=value configuration: '#' starts a comment, keys are dotted
// (layer.B=2.5e-5), later assignments win, CLI overrides are applied last.

#include "wcontact/common.hpp"
#include "wcontact/scenario.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace wcontact {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::pair<std::string, std::string>> parse_kv_text(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> kv;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(strfmt("config line %d: expected key=value, got \"%s\"",
                               line_no, line.c_str()));
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(strfmt("config line %d: empty key", line_no));
    kv.emplace_back(std::move(key), std::move(value));
  }
  return kv;
}

inline std::vector<std::pair<std::string, std::string>> parse_kv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(strfmt("cannot open config file %s", path.c_str()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_kv_text(ss.str());
}

inline double parse_double(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    const double d = std::stod(value, &pos);
    if (trim(value.substr(pos)).empty()) return d;
  } catch (const std::exception&) {
  }
  throw ConfigError(strfmt("config key %s: \"%s\" is not a number", key.c_str(), value.c_str()));
}

inline long parse_int(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    const long v = std::stol(value, &pos);
    if (trim(value.substr(pos)).empty()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError(strfmt("config key %s: \"%s\" is not an integer", key.c_str(), value.c_str()));
}

inline bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "on") return true;
  if (value == "false" || value == "0" || value == "off") return false;
  throw ConfigError(strfmt("config key %s: \"%s\" is not a boolean", key.c_str(), value.c_str()));
}

inline std::vector<double> parse_double_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::istringstream in(value);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse_double(key, item));
  }
  return out;
}

/// Comma list of B:a pairs for the layer sweep, e.g. "1e-5:0.3,1e-5:1".
inline std::vector<std::pair<double, double>> parse_layer_list(const std::string& key,
                                                               const std::string& value) {
  std::vector<std::pair<double, double>> out;
  std::istringstream in(value);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw ConfigError(strfmt("config key %s: expected B:a, got \"%s\"",
                               key.c_str(), item.c_str()));
    out.emplace_back(parse_double(key, trim(item.substr(0, colon))),
                     parse_double(key, trim(item.substr(colon + 1))));
  }
  return out;
}

inline PsiStrategy parse_strategy(const std::string& value) {
  if (value == "neumann") return PsiStrategy::neumann;
  if (value == "full_robin") return PsiStrategy::full_robin;
  if (value == "active_set") return PsiStrategy::active_set;
  throw ConfigError(strfmt(
      "solver.strategy must be one of neumann|full_robin|active_set, got \"%s\"",
      value.c_str()));
}

inline void apply_config_entry(ScenarioConfig& cfg, const std::string& key,
                               const std::string& value) {
  if (key == "geometry.l") cfg.length = parse_double(key, value);
  else if (key == "geometry.h") cfg.height = parse_double(key, value);
  else if (key == "mesh.nx") cfg.nx = int(parse_int(key, value));
  else if (key == "mesh.ny") cfg.ny = int(parse_int(key, value));
  else if (key == "material.E") cfg.young = parse_double(key, value);
  else if (key == "material.nu") cfg.poisson = parse_double(key, value);
  else if (key == "load.q") cfg.load_q = parse_double(key, value);
  else if (key == "layer.B") cfg.layer_b = parse_double(key, value);
  else if (key == "layer.a") cfg.layer_a = parse_double(key, value);
  else if (key == "gap.r") cfg.gap_r = parse_double(key, value);
  else if (key == "gap.b") cfg.gap_width = parse_double(key, value);
  else if (key == "solver.gamma") cfg.solver.gamma_schedule = {parse_double(key, value)};
  else if (key == "solver.gamma_schedule")
    cfg.solver.gamma_schedule = parse_double_list(key, value);
  else if (key == "solver.strategy") cfg.solver.strategy = parse_strategy(value);
  else if (key == "solver.eps_u") cfg.solver.eps_u = parse_double(key, value);
  else if (key == "solver.max_iterations")
    cfg.solver.max_iterations = int(parse_int(key, value));
  else if (key == "solver.initial_trace") cfg.solver.initial_trace = parse_double(key, value);
  else if (key == "solver.divergence_guard")
    cfg.solver.divergence_guard = parse_double(key, value);
  else if (key == "solver.parallel_bodies")
    cfg.solver.parallel_bodies = parse_bool(key, value);
  else if (key == "seed") cfg.seed = std::uint64_t(parse_int(key, value));
  else if (key == "output") cfg.output_dir = value;
  else
    throw ConfigError(strfmt("unknown config key \"%s\"", key.c_str()));
}

/// Loads a ScenarioConfig from defaults, an optional file and ordered
/// key=value overrides (CLI flags); the result is validated.
inline ScenarioConfig load_scenario_config(
    const std::string& config_path,
    const std::vector<std::pair<std::string, std::string>>& overrides = {}) {
  ScenarioConfig cfg;
  if (!config_path.empty())
    for (const auto& [k, v] : parse_kv_file(config_path)) apply_config_entry(cfg, k, v);
  for (const auto& [k, v] : overrides) apply_config_entry(cfg, k, v);
  cfg.validate();
  return cfg;
}

}  // namespace wcontact
