#include "d2dsim/power.hpp"

#include <algorithm>
#include <cmath>

namespace d2d {

double min_power_exclusive(double xi_min, double gain, double noise_mw) {
  return xi_min * noise_mw / gain;
}

std::optional<SharingPowers> shared_min_powers(double g_d2d, double g_cu_bs,
                                               double h_cu_d2d, double h_d2d_bs,
                                               double xi_cu, double xi_d2d,
                                               double noise_mw) {
  const double det = g_d2d * g_cu_bs - xi_cu * xi_d2d * h_cu_d2d * h_d2d_bs;
  if (!(det > 0.0)) {
    return std::nullopt;
  }
  const double p_cu = (g_d2d * xi_cu + h_d2d_bs * xi_cu * xi_d2d) * noise_mw / det;
  const double p_d2d = (h_cu_d2d * xi_cu * xi_d2d + g_cu_bs * xi_d2d) * noise_mw / det;
  if (!std::isfinite(p_cu) || !std::isfinite(p_d2d)) {
    return std::nullopt;
  }
  return SharingPowers{p_cu, p_d2d};
}

bool is_admissible(const SharingPowers& p, double p_max_cu_mw, double p_max_d2d_mw) {
  return p.cu_mw > 0.0 && p.cu_mw <= p_max_cu_mw &&
         p.d2d_mw > 0.0 && p.d2d_mw <= p_max_d2d_mw;
}

CandidateStructure build_candidates(const ChannelRealization& ch,
                                    const SinrTargets& targets,
                                    const ScenarioConfig& cfg) {
  const int n = ch.num_cus;
  const int m = ch.num_pairs;

  CandidateStructure out;
  out.candidates.resize(m);
  out.p_min_exclusive_mw.resize(n);

  for (int i = 0; i < n; ++i) {
    out.p_min_exclusive_mw[i] =
        min_power_exclusive(targets.cu_linear[i], ch.g_cu_bs[i], cfg.noise_power_mw);
  }

  std::vector<char> in_union(n, 0);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) {
      const auto powers = shared_min_powers(ch.g_d2d[j], ch.g_cu_bs[i], ch.h(i, j),
                                            ch.h_d2d_bs[j], targets.cu_linear[i],
                                            targets.d2d_linear[j], cfg.noise_power_mw);
      if (!powers || !is_admissible(*powers, cfg.p_max_cu_mw, cfg.p_max_d2d_mw)) {
        continue;
      }
      const double p_inc =
          (powers->cu_mw + powers->d2d_mw) - out.p_min_exclusive_mw[i];
      out.candidates[j].push_back(Candidate{i, *powers, p_inc});
      in_union[i] = 1;
    }
    if (!out.candidates[j].empty()) {
      out.admissible_set.push_back(j);
    }
  }

  for (int i = 0; i < n; ++i) {
    if (in_union[i]) out.cu_union.push_back(i);
  }
  return out;
}

}  // namespace d2d
