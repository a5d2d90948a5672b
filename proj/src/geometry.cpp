#include "d2dsim/geometry.hpp"

#include <cmath>
#include <sstream>

namespace d2d {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr int kMaxResampleAttempts = 1000;

// Uniform over the disk of given radius around a center: area-uniform
// requires the radial CDF r^2, hence radius * sqrt(u).
Point sample_disk_area_uniform(Point center, double radius, RandomStream& rng) {
  const double rad = radius * std::sqrt(rng.uniform01());
  const double ang = kTwoPi * rng.uniform01();
  return {center.x + rad * std::cos(ang), center.y + rad * std::sin(ang)};
}

// Radial distance uniform on [0, radius], angle uniform.
Point sample_disk_radius_uniform(Point center, double radius, RandomStream& rng) {
  const double rad = radius * rng.uniform01();
  const double ang = kTwoPi * rng.uniform01();
  return {center.x + rad * std::cos(ang), center.y + rad * std::sin(ang)};
}

}  // namespace

double distance(Point a, Point b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

double link_distance(Point a, Point b, double floor_m) {
  return std::max(distance(a, b), floor_m);
}

Topology sample_topology(const ScenarioConfig& cfg, RandomStream& rng) {
  const Point bs{0.0, 0.0};
  const double d_min = cfg.min_link_distance_m;
  const int n = cfg.num_cus;
  const int m = cfg.num_d2d_pairs;

  Topology topo;
  topo.cu_positions.reserve(n);
  topo.cluster_centers.reserve(m);
  topo.d2d_tx_positions.reserve(m);
  topo.d2d_rx_positions.reserve(m);

  // CU uplinks terminate at the BS: keep CUs off the origin.
  for (int i = 0; i < n; ++i) {
    Point p = sample_disk_area_uniform(bs, cfg.cell_radius_m, rng);
    for (int attempt = 0; attempt < kMaxResampleAttempts && distance(p, bs) < d_min; ++attempt) {
      p = sample_disk_area_uniform(bs, cfg.cell_radius_m, rng);
    }
    topo.cu_positions.push_back(p);
  }

  for (int j = 0; j < m; ++j) {
    topo.cluster_centers.push_back(sample_disk_radius_uniform(bs, cfg.cell_radius_m, rng));
  }

  // Links touching D2D nodes: Tx->BS, Tx->Rx, and every CU->Rx.
  for (int j = 0; j < m; ++j) {
    const Point center = topo.cluster_centers[j];

    Point tx = sample_disk_area_uniform(center, cfg.cluster_radius_m, rng);
    for (int attempt = 0; attempt < kMaxResampleAttempts && distance(tx, bs) < d_min; ++attempt) {
      tx = sample_disk_area_uniform(center, cfg.cluster_radius_m, rng);
    }
    topo.d2d_tx_positions.push_back(tx);

    auto rx_ok = [&](Point rx) {
      if (distance(rx, tx) < d_min) return false;
      for (const Point& cu : topo.cu_positions) {
        if (distance(rx, cu) < d_min) return false;
      }
      return true;
    };
    Point rx = sample_disk_area_uniform(center, cfg.cluster_radius_m, rng);
    for (int attempt = 0; attempt < kMaxResampleAttempts && !rx_ok(rx); ++attempt) {
      rx = sample_disk_area_uniform(center, cfg.cluster_radius_m, rng);
    }
    topo.d2d_rx_positions.push_back(rx);
  }

  return topo;
}

std::string render_topology(const Topology& topo) {
  std::ostringstream out;
  out << "role,index,x,y\n";
  auto dump = [&](const char* role, const std::vector<Point>& points) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      out << role << ',' << i << ',' << points[i].x << ',' << points[i].y << '\n';
    }
  };
  dump("cu", topo.cu_positions);
  dump("cluster_center", topo.cluster_centers);
  dump("d2d_tx", topo.d2d_tx_positions);
  dump("d2d_rx", topo.d2d_rx_positions);
  return out.str();
}

}  // namespace d2d
