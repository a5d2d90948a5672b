// geometry.hpp — single-cell topology sampling.
//
// Base station at the origin. CUs are uniform over the cell disk area;
// cluster centers have radial distance uniform on [0, R] (uniform in
// distance, not area — the two populations deliberately follow different
// distributions); D2D endpoints are uniform over their cluster disk.

#pragma once

#include <string>
#include <vector>

#include "d2dsim/config.hpp"
#include "d2dsim/random.hpp"

namespace d2d {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

double distance(Point a, Point b);

// Euclidean distance floored at floor_m; all link lengths go through this.
double link_distance(Point a, Point b, double floor_m);

struct Topology {
  std::vector<Point> cu_positions;      // N
  std::vector<Point> cluster_centers;   // M
  std::vector<Point> d2d_tx_positions;  // M
  std::vector<Point> d2d_rx_positions;  // M
};

// Draw order is fixed (CUs, then centers, then per-pair Tx/Rx), so a given
// stream state yields the same topology shape across cluster radii. Points
// that would create a link shorter than cfg.min_link_distance_m are
// resampled up to 1000 times, after which link_distance's floor takes over.
Topology sample_topology(const ScenarioConfig& cfg, RandomStream& rng);

// Debug dump: one "role,index,x,y" row per node.
std::string render_topology(const Topology& topo);

}  // namespace d2d
