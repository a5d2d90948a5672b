#include "d2dsim/baseline.hpp"

#include <algorithm>
#include <cmath>

namespace d2d {

double baseline_interference_cap_mw(double k_linear, double noise_mw) {
  return (k_linear - 1.0) * noise_mw;
}

double baseline_cu_power_mw(double k_linear, double xi_cu, double noise_mw,
                            double g_cu_bs) {
  return k_linear * xi_cu * noise_mw / g_cu_bs;
}

double baseline_d2d_required_power_mw(double xi_d2d, double noise_mw,
                                      double p_cu_mw, double h_cu_d2d,
                                      double g_d2d) {
  return xi_d2d * (noise_mw + p_cu_mw * h_cu_d2d) / g_d2d;
}

BaselineOutcome baseline_allocate(const ChannelRealization& ch,
                                  const SinrTargets& targets,
                                  const ScenarioConfig& cfg) {
  const int n = ch.num_cus;
  const int m = ch.num_pairs;
  const double k_lin = db_to_linear(cfg.margin_k_db);
  const double i_max = baseline_interference_cap_mw(k_lin, cfg.noise_power_mw);

  BaselineOutcome out;
  out.candidates.candidates.resize(m);
  out.candidates.p_min_exclusive_mw.resize(n);
  out.cu_powers_mw.assign(n, 0.0);
  out.d2d_powers_mw.assign(m, 0.0);

  // A CU that cannot afford the margin within its cap falls back to its
  // exclusive minimum and admits no D2D reuse on its channel.
  std::vector<double> margin_power(n, 0.0);
  std::vector<char> margin_ok(n, 0);
  for (int i = 0; i < n; ++i) {
    const double p_min =
        min_power_exclusive(targets.cu_linear[i], ch.g_cu_bs[i], cfg.noise_power_mw);
    out.candidates.p_min_exclusive_mw[i] = p_min;
    margin_power[i] =
        baseline_cu_power_mw(k_lin, targets.cu_linear[i], cfg.noise_power_mw, ch.g_cu_bs[i]);
    margin_ok[i] = margin_power[i] <= cfg.p_max_cu_mw;
  }

  std::vector<char> in_union(n, 0);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) {
      if (!margin_ok[i]) continue;
      const double p_req = baseline_d2d_required_power_mw(
          targets.d2d_linear[j], cfg.noise_power_mw, margin_power[i], ch.h(i, j), ch.g_d2d[j]);
      const double p_cap = std::min(cfg.p_max_d2d_mw, i_max / ch.h_d2d_bs[j]);
      if (!(p_req > 0.0) || p_req > p_cap) continue;
      const double p_d2d = cfg.baseline_d2d_at_cap ? p_cap : p_req;
      const double weight =
          (margin_power[i] - out.candidates.p_min_exclusive_mw[i]) + p_d2d;
      out.candidates.candidates[j].push_back(
          Candidate{i, SharingPowers{margin_power[i], p_d2d}, weight});
      in_union[i] = 1;
    }
    if (!out.candidates.candidates[j].empty()) {
      out.candidates.admissible_set.push_back(j);
    }
  }
  for (int i = 0; i < n; ++i) {
    if (in_union[i]) out.candidates.cu_union.push_back(i);
  }

  out.assignment = solve_allocation(out.candidates);

  std::vector<char> matched(n, 0);
  for (const auto& [cu, pair] : out.assignment.matches) {
    matched[cu] = 1;
    for (const Candidate& c : out.candidates.candidates[pair]) {
      if (c.cu == cu) {
        out.d2d_powers_mw[pair] = c.powers.d2d_mw;
        break;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    const bool pays_margin =
        margin_ok[i] && (cfg.baseline_margin_all_cus || matched[i]);
    out.cu_powers_mw[i] =
        pays_margin ? margin_power[i] : out.candidates.p_min_exclusive_mw[i];
  }
  return out;
}

}  // namespace d2d
