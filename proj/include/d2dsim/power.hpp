// power.hpp — admissibility and minimum-power control for channel sharing.
//
// For a CU/D2D pair sharing one uplink channel the two SINR constraints
//
//   P_c * g_cu_bs / (noise + P_d * h_d2d_bs) >= xi_cu
//   P_d * g_d2d   / (noise + P_c * h_cu_d2d) >= xi_d2d
//
// have a unique component-wise minimal solution when the coupling
// determinant D = g_d2d * g_cu_bs - xi_cu * xi_d2d * h_cu_d2d * h_d2d_bs is
// positive; both constraints are tight there. D <= 0 means no finite
// positive power pair works.

#pragma once

#include <optional>
#include <vector>

#include "d2dsim/channel.hpp"
#include "d2dsim/config.hpp"

namespace d2d {

struct SinrTargets {
  std::vector<double> cu_linear;   // N
  std::vector<double> d2d_linear;  // M
};

struct SharingPowers {
  double cu_mw = 0.0;
  double d2d_mw = 0.0;
};

// xi_min * noise / gain: exclusive-use minimum CU power.
double min_power_exclusive(double xi_min, double gain, double noise_mw);

// Component-wise minimal powers meeting both targets with equality, or
// nullopt when the pair is infeasible at any power. Infeasibility is an
// expected outcome, not an error.
std::optional<SharingPowers> shared_min_powers(double g_d2d, double g_cu_bs,
                                               double h_cu_d2d, double h_d2d_bs,
                                               double xi_cu, double xi_d2d,
                                               double noise_mw);

// Cap check, boundary inclusive.
bool is_admissible(const SharingPowers& p, double p_max_cu_mw, double p_max_d2d_mw);

struct Candidate {
  int cu = -1;
  SharingPowers powers;
  double p_inc_mw = 0.0;  // (P_c + P_d) - P_min_exclusive[cu]
};

struct CandidateStructure {
  std::vector<std::vector<Candidate>> candidates;  // per D2D pair, ascending CU index
  std::vector<int> admissible_set;                 // pairs with a nonempty candidate set, ascending
  std::vector<int> cu_union;                       // union of all candidate CU indices, ascending
  std::vector<double> p_min_exclusive_mw;          // N
};

// Sweeps all (CU, pair) combinations; keeps the feasible-and-admissible ones
// with their power-increase weight. Pairs with no candidate simply stay out
// of admissible_set (their D2D power is zero downstream).
CandidateStructure build_candidates(const ChannelRealization& ch,
                                    const SinrTargets& targets,
                                    const ScenarioConfig& cfg);

}  // namespace d2d
