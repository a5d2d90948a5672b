#include "d2dsim/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace d2d {

double db_to_linear(Db x) {
  if (!std::isfinite(x.value)) {
    throw std::invalid_argument("db_to_linear: non-finite input");
  }
  return std::pow(10.0, x.value / 10.0);
}

Db linear_to_db(double ratio) {
  if (!std::isfinite(ratio) || ratio <= 0.0) {
    throw std::invalid_argument("linear_to_db: input must be finite and positive");
  }
  return Db{10.0 * std::log10(ratio)};
}

double dbm_to_milliwatts(Dbm x) {
  if (!std::isfinite(x.value)) {
    throw std::invalid_argument("dbm_to_milliwatts: non-finite input");
  }
  return std::pow(10.0, x.value / 10.0);
}

Dbm milliwatts_to_dbm(double mw) {
  if (!std::isfinite(mw) || mw <= 0.0) {
    throw std::invalid_argument("milliwatts_to_dbm: input must be finite and positive");
  }
  return Dbm{10.0 * std::log10(mw)};
}

namespace {

std::string join_errors(const std::vector<std::string>& errors) {
  std::string out = "invalid config:";
  for (const auto& e : errors) {
    out += "\n  " + e;
  }
  return out;
}

}  // namespace

ConfigError::ConfigError(const std::vector<std::string>& errs)
    : std::runtime_error(join_errors(errs)), errors(errs) {}

std::vector<std::string> validate_errors(const ScenarioConfig& cfg) {
  std::vector<std::string> errors;
  auto require = [&](bool ok, const std::string& msg) {
    if (!ok) errors.push_back(msg);
  };

  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };

  require(positive(cfg.cell_radius_m), "cell_radius_m: must be > 0");
  require(positive(cfg.cluster_radius_m), "cluster_radius_m: must be > 0");
  require(cfg.cluster_radius_m < cfg.cell_radius_m,
          "cluster_radius_m: must be < cell_radius_m");
  require(cfg.num_cus > 0, "num_cus: must be > 0");
  // num_d2d_pairs may be zero (degenerate but well-defined: nothing to match).
  require(cfg.num_d2d_pairs >= 0, "num_d2d_pairs: must be >= 0");
  require(positive(cfg.uplink_bandwidth_hz), "uplink_bandwidth_hz: must be > 0");
  require(positive(cfg.noise_power_mw), "noise_power_mw: must be > 0");
  require(positive(cfg.pathloss_exponent), "pathloss_exponent: must be > 0");
  require(positive(cfg.pathloss_constant), "pathloss_constant: must be > 0");
  require(positive(cfg.p_max_cu_mw), "p_max_cu_mw: must be > 0");
  require(positive(cfg.p_max_d2d_mw), "p_max_d2d_mw: must be > 0");
  require(std::isfinite(cfg.sinr_target_lo_db.value) &&
              std::isfinite(cfg.sinr_target_hi_db.value) &&
              cfg.sinr_target_lo_db.value <= cfg.sinr_target_hi_db.value,
          "sinr_target_range_db: lo must be <= hi and finite");
  require(positive(cfg.shadowing_sigma_db.value) ||
              cfg.shadowing_sigma_db.value == 0.0,
          "shadowing_sigma_db: must be >= 0");
  require(positive(cfg.margin_k_db.value), "margin_k_db: must be > 0");
  require(cfg.num_realizations > 0, "num_realizations: must be > 0");
  require(positive(cfg.min_link_distance_m), "min_link_distance_m: must be > 0");
  return errors;
}

ScenarioConfig validate(const ScenarioConfig& cfg) {
  auto errors = validate_errors(cfg);
  if (!errors.empty()) {
    throw ConfigError(errors);
  }
  return cfg;
}

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw ConfigError({key + ": cannot parse '" + value + "' as a number"});
  }
  if (pos != value.size()) {
    throw ConfigError({key + ": trailing characters in '" + value + "'"});
  }
  return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError({key + ": expected true/false, got '" + value + "'"});
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const std::uint64_t v = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ConfigError({key + ": cannot parse '" + value + "' as an unsigned integer"});
  }
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing");
    return static_cast<int>(v);
  } catch (const std::exception&) {
    throw ConfigError({key + ": cannot parse '" + value + "' as an integer"});
  }
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

ScenarioConfig parse_config_text(const std::string& text) {
  ScenarioConfig cfg;
  std::map<std::string, std::string> kv;
  std::vector<std::string> errors;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      errors.push_back("line " + std::to_string(lineno) + ": expected key = value");
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (kv.count(key)) {
      errors.push_back(key + ": duplicate key");
      continue;
    }
    kv[key] = value;
  }
  if (!errors.empty()) throw ConfigError(errors);

  auto take = [&](const std::string& key) -> std::string {
    auto it = kv.find(key);
    if (it == kv.end()) return "";
    std::string v = it->second;
    kv.erase(it);
    return v;
  };

  // Power fields accept one spelling: linear (mw) or level (dbm).
  auto take_power_mw = [&](const std::string& base, double& out) {
    const std::string linear = take(base + "_mw");
    const std::string level = take(base + "_dbm");
    if (!linear.empty() && !level.empty()) {
      errors.push_back(base + ": give either " + base + "_mw or " + base +
                       "_dbm, not both");
      return;
    }
    if (!linear.empty()) out = parse_double(base + "_mw", linear);
    if (!level.empty()) out = dbm_to_milliwatts(Dbm{parse_double(base + "_dbm", level)});
  };

  if (auto v = take("cell_radius_m"); !v.empty()) cfg.cell_radius_m = parse_double("cell_radius_m", v);
  if (auto v = take("cluster_radius_m"); !v.empty()) cfg.cluster_radius_m = parse_double("cluster_radius_m", v);
  if (auto v = take("num_cus"); !v.empty()) cfg.num_cus = parse_int("num_cus", v);
  if (auto v = take("num_d2d_pairs"); !v.empty()) cfg.num_d2d_pairs = parse_int("num_d2d_pairs", v);
  if (auto v = take("uplink_bandwidth_hz"); !v.empty()) cfg.uplink_bandwidth_hz = parse_double("uplink_bandwidth_hz", v);
  take_power_mw("noise_power", cfg.noise_power_mw);
  if (auto v = take("pathloss_exponent"); !v.empty()) cfg.pathloss_exponent = parse_double("pathloss_exponent", v);
  if (auto v = take("pathloss_constant"); !v.empty()) cfg.pathloss_constant = parse_double("pathloss_constant", v);
  take_power_mw("p_max_cu", cfg.p_max_cu_mw);
  take_power_mw("p_max_d2d", cfg.p_max_d2d_mw);
  if (auto v = take("sinr_target_lo_db"); !v.empty()) cfg.sinr_target_lo_db.value = parse_double("sinr_target_lo_db", v);
  if (auto v = take("sinr_target_hi_db"); !v.empty()) cfg.sinr_target_hi_db.value = parse_double("sinr_target_hi_db", v);
  if (auto v = take("shadowing_sigma_db"); !v.empty()) cfg.shadowing_sigma_db.value = parse_double("shadowing_sigma_db", v);
  if (auto v = take("margin_k_db"); !v.empty()) cfg.margin_k_db.value = parse_double("margin_k_db", v);
  if (auto v = take("num_realizations"); !v.empty()) cfg.num_realizations = parse_int("num_realizations", v);
  if (auto v = take("master_seed"); !v.empty()) cfg.master_seed = parse_u64("master_seed", v);
  if (auto v = take("min_link_distance_m"); !v.empty()) cfg.min_link_distance_m = parse_double("min_link_distance_m", v);
  if (auto v = take("baseline_margin_all_cus"); !v.empty()) cfg.baseline_margin_all_cus = parse_bool("baseline_margin_all_cus", v);
  if (auto v = take("baseline_d2d_at_cap"); !v.empty()) cfg.baseline_d2d_at_cap = parse_bool("baseline_d2d_at_cap", v);

  for (const auto& [key, value] : kv) {
    errors.push_back(key + ": unknown key");
  }
  if (!errors.empty()) throw ConfigError(errors);
  return cfg;
}

ScenarioConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError({"cannot open config file: " + path});
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

std::string render_config_file(const ScenarioConfig& cfg) {
  std::ostringstream out;
  out << "# d2dsim scenario configuration\n";
  out << "cell_radius_m = " << fmt(cfg.cell_radius_m) << "\n";
  out << "cluster_radius_m = " << fmt(cfg.cluster_radius_m) << "\n";
  out << "num_cus = " << cfg.num_cus << "\n";
  out << "num_d2d_pairs = " << cfg.num_d2d_pairs << "\n";
  out << "uplink_bandwidth_hz = " << fmt(cfg.uplink_bandwidth_hz) << "\n";
  out << "noise_power_mw = " << fmt(cfg.noise_power_mw) << "\n";
  out << "pathloss_exponent = " << fmt(cfg.pathloss_exponent) << "\n";
  out << "pathloss_constant = " << fmt(cfg.pathloss_constant) << "\n";
  out << "p_max_cu_mw = " << fmt(cfg.p_max_cu_mw) << "\n";
  out << "p_max_d2d_mw = " << fmt(cfg.p_max_d2d_mw) << "\n";
  out << "sinr_target_lo_db = " << fmt(cfg.sinr_target_lo_db.value) << "\n";
  out << "sinr_target_hi_db = " << fmt(cfg.sinr_target_hi_db.value) << "\n";
  out << "shadowing_sigma_db = " << fmt(cfg.shadowing_sigma_db.value) << "\n";
  out << "margin_k_db = " << fmt(cfg.margin_k_db.value) << "\n";
  out << "num_realizations = " << cfg.num_realizations << "\n";
  out << "master_seed = " << cfg.master_seed << "\n";
  out << "min_link_distance_m = " << fmt(cfg.min_link_distance_m) << "\n";
  out << "baseline_margin_all_cus = " << (cfg.baseline_margin_all_cus ? "true" : "false") << "\n";
  out << "baseline_d2d_at_cap = " << (cfg.baseline_d2d_at_cap ? "true" : "false") << "\n";
  return out.str();
}

std::string render_config_echo(const ScenarioConfig& cfg) {
  std::ostringstream out;
  out << "cell_radius_m=" << fmt(cfg.cell_radius_m)
      << " cluster_radius_m=" << fmt(cfg.cluster_radius_m)
      << " num_cus=" << cfg.num_cus
      << " num_d2d_pairs=" << cfg.num_d2d_pairs
      << " uplink_bandwidth_hz=" << fmt(cfg.uplink_bandwidth_hz)
      << " noise_power_mw=" << fmt(cfg.noise_power_mw)
      << " pathloss_exponent=" << fmt(cfg.pathloss_exponent)
      << " pathloss_constant=" << fmt(cfg.pathloss_constant)
      << " p_max_cu_mw=" << fmt(cfg.p_max_cu_mw)
      << " p_max_d2d_mw=" << fmt(cfg.p_max_d2d_mw)
      << " sinr_target_lo_db=" << fmt(cfg.sinr_target_lo_db.value)
      << " sinr_target_hi_db=" << fmt(cfg.sinr_target_hi_db.value)
      << " shadowing_sigma_db=" << fmt(cfg.shadowing_sigma_db.value)
      << " margin_k_db=" << fmt(cfg.margin_k_db.value)
      << " num_realizations=" << cfg.num_realizations
      << " master_seed=" << cfg.master_seed
      << " min_link_distance_m=" << fmt(cfg.min_link_distance_m)
      << " baseline_margin_all_cus=" << (cfg.baseline_margin_all_cus ? "true" : "false")
      << " baseline_d2d_at_cap=" << (cfg.baseline_d2d_at_cap ? "true" : "false");
  return out.str();
}

}  // namespace d2d
