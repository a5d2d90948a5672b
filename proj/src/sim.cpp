#include "d2dsim/sim.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "d2dsim/geometry.hpp"

namespace d2d {

SinrTargets sample_targets(const ScenarioConfig& cfg, RandomStream& rng) {
  SinrTargets targets;
  targets.cu_linear.reserve(cfg.num_cus);
  targets.d2d_linear.reserve(cfg.num_d2d_pairs);
  const double lo = cfg.sinr_target_lo_db.value;
  const double hi = cfg.sinr_target_hi_db.value;
  for (int i = 0; i < cfg.num_cus; ++i) {
    targets.cu_linear.push_back(db_to_linear(Db{rng.uniform(lo, hi)}));
  }
  for (int j = 0; j < cfg.num_d2d_pairs; ++j) {
    targets.d2d_linear.push_back(db_to_linear(Db{rng.uniform(lo, hi)}));
  }
  return targets;
}

RealizationMetrics compute_metrics(const Assignment& assignment,
                                   const std::vector<double>& cu_powers_mw,
                                   const std::vector<double>& d2d_powers_mw,
                                   const ChannelRealization& ch,
                                   const SinrTargets& targets,
                                   const ScenarioConfig& cfg) {
  const int n = ch.num_cus;
  const int m = ch.num_pairs;
  const double w_hz = cfg.uplink_bandwidth_hz / n;
  const double noise = cfg.noise_power_mw;

  RealizationMetrics out;

  // Reference: every CU alone at its exclusive minimum, SINR equal to its
  // target. The rate term goes through the same realized-SINR expression as
  // the with-D2D side, so an unmatched CU contributes identically to both.
  for (int i = 0; i < n; ++i) {
    const double p_min =
        min_power_exclusive(targets.cu_linear[i], ch.g_cu_bs[i], noise);
    out.power_no_d2d_mw += p_min;
    const double sinr = p_min * ch.g_cu_bs[i] / (noise + 0.0);
    out.throughput_no_d2d_bps += w_hz * std::log2(1.0 + sinr);
  }

  std::vector<int> partner_of_cu(n, -1);
  for (const auto& [cu, pair] : assignment.matches) {
    partner_of_cu[cu] = pair;
  }

  for (int i = 0; i < n; ++i) {
    out.power_with_d2d_mw += cu_powers_mw[i];
    const int pair = partner_of_cu[i];
    const double interference =
        (pair >= 0) ? d2d_powers_mw[pair] * ch.h_d2d_bs[pair] : 0.0;
    const double sinr = cu_powers_mw[i] * ch.g_cu_bs[i] / (noise + interference);
    out.throughput_with_d2d_bps += w_hz * std::log2(1.0 + sinr);
  }
  for (const auto& [cu, pair] : assignment.matches) {
    out.power_with_d2d_mw += d2d_powers_mw[pair];
    const double sinr = d2d_powers_mw[pair] * ch.g_d2d[pair] /
                        (noise + cu_powers_mw[cu] * ch.h(cu, pair));
    out.throughput_with_d2d_bps += w_hz * std::log2(1.0 + sinr);
  }

  out.access_ratio =
      (m > 0) ? static_cast<double>(assignment.matches.size()) / m : 0.0;
  out.ee_no_d2d = out.throughput_no_d2d_bps / out.power_no_d2d_mw;
  out.ee_with_d2d = out.throughput_with_d2d_bps / out.power_with_d2d_mw;
  return out;
}

SchemeMetrics run_realization(const ScenarioConfig& cfg, RandomStream& rng,
                              bool include_baseline) {
  const SinrTargets targets = sample_targets(cfg, rng);
  const Topology topo = sample_topology(cfg, rng);
  const ChannelRealization ch = realize_channels(topo, cfg, rng);
  const int m = ch.num_pairs;

  SchemeMetrics out;

  const CandidateStructure cand = build_candidates(ch, targets, cfg);
  const Assignment assignment = solve_allocation(cand);
  std::vector<double> cu_powers = cand.p_min_exclusive_mw;
  std::vector<double> d2d_powers(m, 0.0);
  for (const auto& [cu, pair] : assignment.matches) {
    for (const Candidate& c : cand.candidates[pair]) {
      if (c.cu == cu) {
        cu_powers[cu] = c.powers.cu_mw;
        d2d_powers[pair] = c.powers.d2d_mw;
        break;
      }
    }
  }
  out.proposed = compute_metrics(assignment, cu_powers, d2d_powers, ch, targets, cfg);
  out.proposed.admissible_ratio =
      (m > 0) ? static_cast<double>(cand.admissible_set.size()) / m : 0.0;

  if (include_baseline) {
    const BaselineOutcome bl = baseline_allocate(ch, targets, cfg);
    out.baseline = compute_metrics(bl.assignment, bl.cu_powers_mw, bl.d2d_powers_mw,
                                   ch, targets, cfg);
    out.baseline.admissible_ratio =
        (m > 0) ? static_cast<double>(bl.candidates.admissible_set.size()) / m : 0.0;
    out.has_baseline = true;
  }
  return out;
}

SchemeMetrics run_realization(const ScenarioConfig& cfg, std::uint64_t realization_index,
                              bool include_baseline) {
  RandomStream rng = RandomStream::substream(cfg.master_seed, realization_index);
  return run_realization(cfg, rng, include_baseline);
}

namespace {

std::array<double, 8> derived_columns(const RealizationMetrics& r) {
  const double power_inc = r.power_with_d2d_mw - r.power_no_d2d_mw;
  const double tput_inc = r.throughput_with_d2d_bps - r.throughput_no_d2d_bps;
  const double ee_inc = r.ee_with_d2d - r.ee_no_d2d;
  return {r.access_ratio,
          r.admissible_ratio,
          power_inc,
          100.0 * power_inc / r.power_no_d2d_mw,
          tput_inc,
          100.0 * tput_inc / r.throughput_no_d2d_bps,
          ee_inc,
          100.0 * ee_inc / r.ee_no_d2d};
}

MetricColumns to_columns(const std::array<double, 8>& a) {
  return MetricColumns{a[0], a[1], a[2], a[3], a[4], a[5], a[6], a[7]};
}

// Two-pass mean/sd over a fixed index order, so the result does not depend
// on how realizations were scheduled.
AggregateRow aggregate(const std::vector<std::array<double, 8>>& rows) {
  const std::size_t count = rows.size();
  std::array<double, 8> mean{};
  for (const auto& row : rows) {
    for (int k = 0; k < 8; ++k) mean[k] += row[k];
  }
  for (int k = 0; k < 8; ++k) mean[k] /= static_cast<double>(count);

  std::array<double, 8> sd{};
  if (count > 1) {
    for (const auto& row : rows) {
      for (int k = 0; k < 8; ++k) {
        const double d = row[k] - mean[k];
        sd[k] += d * d;
      }
    }
    for (int k = 0; k < 8; ++k) {
      sd[k] = std::sqrt(sd[k] / static_cast<double>(count - 1));
    }
  }
  return AggregateRow{to_columns(mean), to_columns(sd)};
}

}  // namespace

MonteCarloResult run_monte_carlo(const ScenarioConfig& cfg, const RunOptions& opts) {
  const int count = cfg.num_realizations;
  std::vector<std::array<double, 8>> proposed_rows(count);
  std::vector<std::array<double, 8>> baseline_rows(opts.include_baseline ? count : 0);

  int workers = opts.num_workers > 0
                    ? opts.num_workers
                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, count);

  std::atomic<int> next{0};
  auto work = [&]() {
    for (int idx = next.fetch_add(1); idx < count; idx = next.fetch_add(1)) {
      const SchemeMetrics metrics =
          run_realization(cfg, static_cast<std::uint64_t>(idx), opts.include_baseline);
      proposed_rows[idx] = derived_columns(metrics.proposed);
      if (opts.include_baseline) {
        baseline_rows[idx] = derived_columns(metrics.baseline);
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  MonteCarloResult out;
  out.realizations = count;
  out.proposed = aggregate(proposed_rows);
  if (opts.include_baseline) {
    out.baseline = aggregate(baseline_rows);
    out.has_baseline = true;
  }
  return out;
}

const char* sweep_axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::cluster_radius:
      return "cluster_radius_m";
    case SweepAxis::d2d_fraction:
      return "d2d_fraction";
  }
  return "unknown";
}

SweepResult sweep(const ScenarioConfig& cfg, SweepAxis axis,
                  const std::vector<double>& values, const RunOptions& opts,
                  const SweepProgress& progress) {
  if (values.empty()) {
    throw std::invalid_argument("sweep: axis values must be nonempty");
  }
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (!(values[k] > values[k - 1])) {
      throw std::invalid_argument("sweep: axis values must be strictly increasing");
    }
  }

  SweepResult out;
  out.axis = axis;
  out.master_seed = cfg.master_seed;
  const int total = static_cast<int>(values.size());
  for (int k = 0; k < total; ++k) {
    SweepRow row;
    row.axis_value = values[k];
    ScenarioConfig point = cfg;
    if (axis == SweepAxis::cluster_radius) {
      point.cluster_radius_m = values[k];
    } else {
      point.num_d2d_pairs =
          static_cast<int>(std::lround(values[k] * cfg.num_cus));
    }
    const auto errors = validate_errors(point);
    if (!errors.empty()) {
      row.ok = false;
      row.error = sweep_axis_name(axis) + std::string("=") +
                  std::to_string(values[k]) + ": invalid point";
      for (const auto& e : errors) row.error += "; " + e;
    } else {
      row.mc = run_monte_carlo(point, opts);
      row.ok = true;
    }
    out.rows.push_back(std::move(row));
    if (progress) progress(k, total, values[k]);
  }
  return out;
}

}  // namespace d2d
