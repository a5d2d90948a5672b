// sim.hpp — Monte Carlo engine and metrics.
//
// One realization draws SINR targets, a topology and a channel realization,
// then runs the proposed and baseline allocations on that same draw, so
// per-realization differences reflect the scheme and nothing else. Streams
// derive from (master_seed, realization_index): results are independent of
// worker count and execution order.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "d2dsim/baseline.hpp"
#include "d2dsim/channel.hpp"
#include "d2dsim/config.hpp"
#include "d2dsim/matching.hpp"
#include "d2dsim/power.hpp"

namespace d2d {

struct RealizationMetrics {
  double access_ratio = 0.0;      // matched pairs / M
  double admissible_ratio = 0.0;  // |S| / M
  double power_no_d2d_mw = 0.0;
  double power_with_d2d_mw = 0.0;
  double throughput_no_d2d_bps = 0.0;
  double throughput_with_d2d_bps = 0.0;
  double ee_no_d2d = 0.0;  // bits/s per mW
  double ee_with_d2d = 0.0;
};

struct SchemeMetrics {
  RealizationMetrics proposed;
  RealizationMetrics baseline;
  bool has_baseline = false;
};

// Per-user targets drawn independently per realization: uniform in dB over
// the configured range, then linearized.
SinrTargets sample_targets(const ScenarioConfig& cfg, RandomStream& rng);

// Shannon-rate metrics at the given powers against the no-D2D reference
// (every CU alone at its exclusive minimum power, hitting its target
// exactly). Per-channel bandwidth is total bandwidth / N. Realized SINRs are
// recomputed from the powers and gains; matched D2D pairs add their own
// rate term. admissible_ratio is left at zero — the caller knows the
// scheme's admissible set.
RealizationMetrics compute_metrics(const Assignment& assignment,
                                   const std::vector<double>& cu_powers_mw,
                                   const std::vector<double>& d2d_powers_mw,
                                   const ChannelRealization& ch,
                                   const SinrTargets& targets,
                                   const ScenarioConfig& cfg);

// Draw order: targets, topology, channels — then both schemes on the same
// realization.
SchemeMetrics run_realization(const ScenarioConfig& cfg, RandomStream& rng,
                              bool include_baseline = true);
SchemeMetrics run_realization(const ScenarioConfig& cfg, std::uint64_t realization_index,
                              bool include_baseline = true);

// One aggregate column set: means (or sample standard deviations) of the
// per-realization derived metrics. "_pct" columns are the increase as a
// percentage of the no-D2D value, averaged per realization.
struct MetricColumns {
  double access_ratio = 0.0;
  double admissible_ratio = 0.0;
  double power_inc_mw = 0.0;
  double power_inc_pct = 0.0;
  double tput_inc_bps = 0.0;
  double tput_inc_pct = 0.0;
  double ee_inc = 0.0;
  double ee_inc_pct = 0.0;
};

struct AggregateRow {
  MetricColumns mean;
  MetricColumns sd;  // sample standard deviation (n - 1)
};

struct MonteCarloResult {
  int realizations = 0;
  AggregateRow proposed;
  AggregateRow baseline;
  bool has_baseline = false;
};

struct RunOptions {
  int num_workers = 0;  // 0 = all available
  bool include_baseline = true;
};

// Mean/sd over cfg.num_realizations realizations. Realizations may execute
// on any number of workers; aggregation always walks results in realization
// order, so the output is bit-identical regardless of scheduling.
MonteCarloResult run_monte_carlo(const ScenarioConfig& cfg, const RunOptions& opts = {});

enum class SweepAxis { cluster_radius, d2d_fraction };

const char* sweep_axis_name(SweepAxis axis);

struct SweepRow {
  double axis_value = 0.0;
  bool ok = false;
  std::string error;
  MonteCarloResult mc;
};

struct SweepResult {
  SweepAxis axis = SweepAxis::cluster_radius;
  std::uint64_t master_seed = 0;
  std::vector<SweepRow> rows;
};

using SweepProgress = std::function<void(int row_index, int row_count, double axis_value)>;

// One Monte Carlo run per axis value. cluster_radius overrides
// cluster_radius_m; d2d_fraction sets M = round(fraction * N). A value that
// fails config validation produces an error row and the sweep continues.
// Axis values must be nonempty and strictly increasing.
SweepResult sweep(const ScenarioConfig& cfg, SweepAxis axis,
                  const std::vector<double>& values, const RunOptions& opts = {},
                  const SweepProgress& progress = nullptr);

}  // namespace d2d
