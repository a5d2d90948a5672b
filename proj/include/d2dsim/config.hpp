// config.hpp — scenario parameters, unit conversions, validation.
//
// Canonical units everywhere past the config boundary: milliwatts for power,
// meters for distance, Hz for bandwidth, linear ratios for gains and SINR.
// Values that are inherently decibel-scaled (target ranges, shadowing spread,
// the baseline margin) keep the Db wrapper type and are converted at their
// single point of use, so a raw dB number cannot slip into a physics formula.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace d2d {

// Relative level in decibels.
struct Db {
  double value = 0.0;
};

// Absolute power level in dBm.
struct Dbm {
  double value = 0.0;
};

// 10^(x/10). Throws std::invalid_argument on non-finite input.
double db_to_linear(Db x);
Db linear_to_db(double ratio);

// 10^(x/10) milliwatts. Throws std::invalid_argument on non-finite input.
double dbm_to_milliwatts(Dbm x);
Dbm milliwatts_to_dbm(double mw);

struct ScenarioConfig {
  double cell_radius_m = 500.0;     // R
  double cluster_radius_m = 60.0;   // r
  int num_cus = 20;                 // N
  int num_d2d_pairs = 10;           // M
  double uplink_bandwidth_hz = 5.0e6;
  double noise_power_mw = 3.9810717055349695e-12;  // -114 dBm
  double pathloss_exponent = 4.0;   // alpha
  double pathloss_constant = 1.0e-2;  // K
  double p_max_cu_mw = 251.18864315095797;   // 24 dBm
  double p_max_d2d_mw = 251.18864315095797;  // 24 dBm
  Db sinr_target_lo_db{0.0};
  Db sinr_target_hi_db{25.0};
  Db shadowing_sigma_db{8.0};
  Db margin_k_db{1.0};              // baseline only
  int num_realizations = 10000;
  std::uint64_t master_seed = 1;
  // The L^(-alpha) path loss diverges as L -> 0; sampled link lengths are
  // floored at this value.
  double min_link_distance_m = 1.0;
  // Baseline interpretation switches (both readings of the comparison
  // scheme are runnable).
  bool baseline_margin_all_cus = true;  // margin provisioned at every CU, matched or not
  bool baseline_d2d_at_cap = false;     // D2D transmits at the interference cap instead of its minimum
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::vector<std::string>& errors);
  std::vector<std::string> errors;
};

// Empty result means the config is valid. Each violated invariant is
// reported once, prefixed with the offending field name.
std::vector<std::string> validate_errors(const ScenarioConfig& cfg);

// Returns cfg unchanged when valid, throws ConfigError otherwise.
ScenarioConfig validate(const ScenarioConfig& cfg);

// Flat key = value file, '#' comments. The loader accepts both linear and
// dB/dBm spellings of the power keys (noise_power_mw or noise_power_dbm,
// p_max_cu_mw or p_max_cu_dbm, ...); giving both spellings of one field is
// an error. The writer emits linear keys with full precision, so
// load(save(cfg)) reproduces cfg bit for bit.
ScenarioConfig parse_config_text(const std::string& text);
ScenarioConfig load_config_file(const std::string& path);
std::string render_config_file(const ScenarioConfig& cfg);

// Single-line "key=value key=value ..." echo of the resolved (linear-unit)
// configuration, used for CSV comment headers and validate-config output.
std::string render_config_echo(const ScenarioConfig& cfg);

}  // namespace d2d
