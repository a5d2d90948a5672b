// d2dsim_main.cpp — command-line front end.
//
// Subcommands mirror the two experiment families plus single runs:
//   run              one Monte Carlo experiment at the configured point
//   sweep-radius     cluster-radius sweep (default 20..100 m)
//   sweep-density    D2D/CU ratio sweep (default 10%..100%)
//   validate-config  resolve, validate and echo the configuration
//
// Exit codes: 0 success, 2 configuration error, 3 I/O error. Progress goes
// to stderr; stdout carries the summary so it stays pipeable.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "d2dsim/report.hpp"
#include "d2dsim/sim.hpp"

namespace {

struct CliOptions {
  std::string config_path;
  std::string output_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> realizations;
  int workers = 0;
  bool no_baseline = false;

  std::optional<double> cell_radius_m;
  std::optional<double> cluster_radius_m;
  std::optional<int> num_cus;
  std::optional<int> num_d2d_pairs;
  std::optional<double> bandwidth_hz;
  std::optional<double> noise_dbm;
  std::optional<double> pathloss_exponent;
  std::optional<double> pathloss_constant;
  std::optional<double> p_max_cu_dbm;
  std::optional<double> p_max_d2d_dbm;
  std::optional<double> sinr_lo_db;
  std::optional<double> sinr_hi_db;
  std::optional<double> shadowing_sigma_db;
  std::optional<double> margin_db;
  std::optional<double> min_link_distance_m;
  std::optional<bool> baseline_margin_all_cus;
  std::optional<bool> baseline_d2d_at_cap;

  std::vector<double> radii;
  std::vector<double> fractions;
};

void add_shared_options(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("-c,--config", opt.config_path, "Config file (flat key = value)");
  cmd->add_option("-o,--output", opt.output_path, "Output CSV path");
  cmd->add_option("--seed", opt.seed, "Master seed override");
  cmd->add_option("--realizations", opt.realizations, "Monte Carlo realization count");
  cmd->add_option("--workers", opt.workers, "Worker threads (0 = all available)");
  cmd->add_flag("--no-baseline", opt.no_baseline, "Skip the fixed-margin baseline scheme");

  cmd->add_option("--cell-radius-m", opt.cell_radius_m, "Cell radius R in meters");
  cmd->add_option("--cluster-radius-m", opt.cluster_radius_m, "D2D cluster radius r in meters");
  cmd->add_option("--num-cus", opt.num_cus, "Active CU count N");
  cmd->add_option("--num-d2d", opt.num_d2d_pairs, "D2D pair count M");
  cmd->add_option("--bandwidth-hz", opt.bandwidth_hz, "Total uplink bandwidth in Hz");
  cmd->add_option("--noise-dbm", opt.noise_dbm, "AWGN power in dBm");
  cmd->add_option("--pathloss-exponent", opt.pathloss_exponent, "Path loss exponent alpha");
  cmd->add_option("--pathloss-constant", opt.pathloss_constant, "Path loss constant K");
  cmd->add_option("--pmax-cu-dbm", opt.p_max_cu_dbm, "CU transmit power cap in dBm");
  cmd->add_option("--pmax-d2d-dbm", opt.p_max_d2d_dbm, "D2D transmit power cap in dBm");
  cmd->add_option("--sinr-lo-db", opt.sinr_lo_db, "Target SINR range lower edge in dB");
  cmd->add_option("--sinr-hi-db", opt.sinr_hi_db, "Target SINR range upper edge in dB");
  cmd->add_option("--shadowing-sigma-db", opt.shadowing_sigma_db, "Shadowing spread in dB");
  cmd->add_option("--margin-db", opt.margin_db, "Baseline fixed margin k in dB");
  cmd->add_option("--min-link-distance-m", opt.min_link_distance_m, "Link length floor in meters");
  cmd->add_option("--baseline-margin-all-cus", opt.baseline_margin_all_cus,
                  "Baseline provisions the margin at every CU (true/false)");
  cmd->add_option("--baseline-d2d-at-cap", opt.baseline_d2d_at_cap,
                  "Baseline D2D transmits at the interference cap (true/false)");
}

// File first, then flags on top: flag wins on conflict.
d2d::ScenarioConfig resolve_config(const CliOptions& opt) {
  d2d::ScenarioConfig cfg;
  if (!opt.config_path.empty()) {
    cfg = d2d::load_config_file(opt.config_path);
  }
  if (opt.seed) cfg.master_seed = *opt.seed;
  if (opt.realizations) cfg.num_realizations = *opt.realizations;
  if (opt.cell_radius_m) cfg.cell_radius_m = *opt.cell_radius_m;
  if (opt.cluster_radius_m) cfg.cluster_radius_m = *opt.cluster_radius_m;
  if (opt.num_cus) cfg.num_cus = *opt.num_cus;
  if (opt.num_d2d_pairs) cfg.num_d2d_pairs = *opt.num_d2d_pairs;
  if (opt.bandwidth_hz) cfg.uplink_bandwidth_hz = *opt.bandwidth_hz;
  if (opt.noise_dbm) cfg.noise_power_mw = d2d::dbm_to_milliwatts(d2d::Dbm{*opt.noise_dbm});
  if (opt.pathloss_exponent) cfg.pathloss_exponent = *opt.pathloss_exponent;
  if (opt.pathloss_constant) cfg.pathloss_constant = *opt.pathloss_constant;
  if (opt.p_max_cu_dbm) cfg.p_max_cu_mw = d2d::dbm_to_milliwatts(d2d::Dbm{*opt.p_max_cu_dbm});
  if (opt.p_max_d2d_dbm) cfg.p_max_d2d_mw = d2d::dbm_to_milliwatts(d2d::Dbm{*opt.p_max_d2d_dbm});
  if (opt.sinr_lo_db) cfg.sinr_target_lo_db.value = *opt.sinr_lo_db;
  if (opt.sinr_hi_db) cfg.sinr_target_hi_db.value = *opt.sinr_hi_db;
  if (opt.shadowing_sigma_db) cfg.shadowing_sigma_db.value = *opt.shadowing_sigma_db;
  if (opt.margin_db) cfg.margin_k_db.value = *opt.margin_db;
  if (opt.min_link_distance_m) cfg.min_link_distance_m = *opt.min_link_distance_m;
  if (opt.baseline_margin_all_cus) cfg.baseline_margin_all_cus = *opt.baseline_margin_all_cus;
  if (opt.baseline_d2d_at_cap) cfg.baseline_d2d_at_cap = *opt.baseline_d2d_at_cap;
  return d2d::validate(cfg);
}

// Temp file in the target directory, then rename: no partial CSV is ever
// visible at the output path.
void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open for writing: " + tmp.string());
    }
    out << content;
    out.flush();
    if (!out) {
      throw std::runtime_error("write failed: " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot rename " + tmp.string() + " to " + path);
  }
}

void print_summary(const d2d::SweepResult& result) {
  std::printf("%-12s %-9s %12s %14s %16s %12s\n", "axis", "scheme", "access_ratio",
              "power_inc_mw", "tput_inc_bps", "ee_inc");
  for (const auto& row : result.rows) {
    if (!row.ok) continue;
    auto line = [&](const char* scheme, const d2d::AggregateRow& agg) {
      std::printf("%-12g %-9s %12.4f %14.6g %16.6g %12.6g\n", row.axis_value, scheme,
                  agg.mean.access_ratio, agg.mean.power_inc_mw, agg.mean.tput_inc_bps,
                  agg.mean.ee_inc);
    };
    line("proposed", row.mc.proposed);
    if (row.mc.has_baseline) line("baseline", row.mc.baseline);
  }
}

int run_and_write(const d2d::ScenarioConfig& cfg, d2d::SweepAxis axis,
                  const std::vector<double>& values, const CliOptions& opt,
                  const std::string& default_output) {
  d2d::RunOptions run_opts;
  run_opts.num_workers = opt.workers;
  run_opts.include_baseline = !opt.no_baseline;

  const auto progress = [&](int idx, int total, double value) {
    std::fprintf(stderr, "[%d/%d] %s = %g done\n", idx + 1, total,
                 d2d::sweep_axis_name(axis), value);
  };
  const d2d::SweepResult result = d2d::sweep(cfg, axis, values, run_opts, progress);
  for (const auto& row : result.rows) {
    if (!row.ok) std::fprintf(stderr, "skipped row: %s\n", row.error.c_str());
  }

  const std::string path = opt.output_path.empty() ? default_output : opt.output_path;
  try {
    write_file_atomic(path, d2d::render_csv(result, cfg));
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  print_summary(result);
  std::fprintf(stderr, "wrote %s\n", path.c_str());
  return 0;
}

std::vector<double> default_radii() {
  return {20, 30, 40, 50, 60, 70, 80, 90, 100};
}

std::vector<double> default_fractions() {
  return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"D2D underlay resource allocation simulator"};
  app.require_subcommand(1);

  CliOptions opt;
  CLI::App* cmd_run = app.add_subcommand("run", "Single Monte Carlo experiment");
  CLI::App* cmd_radius =
      app.add_subcommand("sweep-radius", "Sweep the D2D cluster radius");
  CLI::App* cmd_density =
      app.add_subcommand("sweep-density", "Sweep the D2D/CU ratio");
  CLI::App* cmd_validate =
      app.add_subcommand("validate-config", "Validate and echo the configuration");
  for (CLI::App* cmd : {cmd_run, cmd_radius, cmd_density, cmd_validate}) {
    add_shared_options(cmd, opt);
  }
  cmd_radius->add_option("--radii", opt.radii, "Cluster radii to sweep, meters (ascending)");
  cmd_density->add_option("--fractions", opt.fractions, "D2D/CU fractions to sweep (ascending)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  d2d::ScenarioConfig cfg;
  try {
    cfg = resolve_config(opt);
  } catch (const d2d::ConfigError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  try {
    if (cmd_validate->parsed()) {
      std::printf("%s", d2d::render_config_file(cfg).c_str());
      return 0;
    }
    if (cmd_run->parsed()) {
      return run_and_write(cfg, d2d::SweepAxis::cluster_radius,
                           {cfg.cluster_radius_m}, opt, "run.csv");
    }
    if (cmd_radius->parsed()) {
      const auto values = opt.radii.empty() ? default_radii() : opt.radii;
      return run_and_write(cfg, d2d::SweepAxis::cluster_radius, values, opt,
                           "sweep_radius.csv");
    }
    const auto values = opt.fractions.empty() ? default_fractions() : opt.fractions;
    return run_and_write(cfg, d2d::SweepAxis::d2d_fraction, values, opt,
                         "sweep_density.csv");
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
