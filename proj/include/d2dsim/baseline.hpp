// baseline.hpp — fixed-margin comparison scheme.
//
// Every CU pre-provisions a fixed SINR margin k: it transmits
// k_lin * xi_cu * noise / g_cu_bs, which tolerates up to
// I_max = (k_lin - 1) * noise of D2D interference at the BS before its SINR
// drops below target. A D2D pair may ride channel i when the power meeting
// its own target under the CU's (margined) interference also respects both
// the D2D cap and the interference budget I_max / h_d2d_bs. Partner
// selection reuses the same padded Hungarian machinery with total power
// increase as the weight, so the only experimental variable versus the
// proposed scheme is the power-control rule.

#pragma once

#include <vector>

#include "d2dsim/matching.hpp"

namespace d2d {

// (k_lin - 1) * noise: interference the margin absorbs at the BS.
double baseline_interference_cap_mw(double k_linear, double noise_mw);

// k_lin * xi_cu * noise / g_cu_bs: the margin-provisioned CU power.
double baseline_cu_power_mw(double k_linear, double xi_cu, double noise_mw,
                            double g_cu_bs);

// xi_d2d * (noise + p_cu * h_cu_d2d) / g_d2d: minimum D2D power meeting its
// own target against the margined CU.
double baseline_d2d_required_power_mw(double xi_d2d, double noise_mw,
                                      double p_cu_mw, double h_cu_d2d,
                                      double g_d2d);

struct BaselineOutcome {
  Assignment assignment;
  std::vector<double> cu_powers_mw;   // N
  std::vector<double> d2d_powers_mw;  // M, zero when unmatched
  CandidateStructure candidates;      // baseline admissibility and weights
};

BaselineOutcome baseline_allocate(const ChannelRealization& ch,
                                  const SinrTargets& targets,
                                  const ScenarioConfig& cfg);

}  // namespace d2d
