// channel.hpp — link gain realization: path loss x fast fading x shadowing.
//
// Every link gain is K * beta * zeta * L^(-alpha) with beta ~ Exp(mean 1)
// and zeta log-normal with unit linear mean and the configured dB spread.
// Fading draws are independent per link and per realization.

#pragma once

#include <vector>

#include "d2dsim/config.hpp"
#include "d2dsim/geometry.hpp"
#include "d2dsim/random.hpp"

namespace d2d {

struct ChannelRealization {
  int num_cus = 0;
  int num_pairs = 0;
  std::vector<double> g_cu_bs;   // N: CU i -> BS
  std::vector<double> g_d2d;     // M: D2D Tx j -> Rx j
  std::vector<double> h_d2d_bs;  // M: D2D Tx j -> BS (interference)
  std::vector<double> h_cu_d2d;  // N x M row-major: CU i -> Rx j (interference)

  double h(int cu, int pair) const { return h_cu_d2d[static_cast<std::size_t>(cu) * num_pairs + pair]; }
  double& h(int cu, int pair) { return h_cu_d2d[static_cast<std::size_t>(cu) * num_pairs + pair]; }
};

// Test hook: forces beta = zeta = 1 for deterministic geometry-only gains.
// Not reachable from the CLI.
struct FadingOptions {
  bool disabled = false;
};

double sample_fast_fading(RandomStream& rng);

// zeta = exp(X), X ~ Normal(-s^2/2, s^2) with s = sigma_db * ln(10)/20;
// the mean shift makes E[zeta] = 1 while the exponent keeps the dB spread.
double sample_slow_fading(Db sigma_db, RandomStream& rng);

// K * beta * zeta * L^(-alpha). Throws std::invalid_argument when the
// distance is not strictly positive.
double link_gain(double pathloss_constant, double beta, double zeta,
                 double distance_m, double alpha);

// Fresh independent (beta, zeta) per link; N + M + M + N*M links total,
// drawn in that order.
ChannelRealization realize_channels(const Topology& topo, const ScenarioConfig& cfg,
                                    RandomStream& rng, FadingOptions fading = {});

}  // namespace d2d
