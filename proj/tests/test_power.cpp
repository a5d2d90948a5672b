// test_power.cpp — closed-form powers, admissibility, candidate structure.

#include <cmath>

#include "d2dsim/power.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace d2d;

namespace {

// One shared channel with a single CU and single D2D pair.
ChannelRealization single_link_channel(double g_cu_bs, double g_d2d,
                                       double h_cu_d2d, double h_d2d_bs) {
  ChannelRealization ch;
  ch.num_cus = 1;
  ch.num_pairs = 1;
  ch.g_cu_bs = {g_cu_bs};
  ch.g_d2d = {g_d2d};
  ch.h_d2d_bs = {h_d2d_bs};
  ch.h_cu_d2d = {h_cu_d2d};
  return ch;
}

}  // namespace

TEST_SUITE("power") {

TEST_CASE("exclusive minimum power") {
  CHECK(min_power_exclusive(1.0, 1.0, 1.0) == 1.0);
  CHECK(min_power_exclusive(10.0, 4.0, 2.0) == 5.0);
  // 25 dB target, reference noise, weak gain.
  const double xi = db_to_linear(Db{25.0});
  CHECK(min_power_exclusive(xi, 1e-6, 3.9811e-12) ==
        doctest::Approx(1.2589e-3).epsilon(1e-4));
}

TEST_CASE("shared minimum powers: decoupled case") {
  const auto p = shared_min_powers(1.0, 1.0, 0.0, 0.0, 1.0, 1.0, 1.0);
  REQUIRE(p.has_value());
  CHECK(p->cu_mw == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p->d2d_mw == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("shared minimum powers: coupled case meets both targets exactly") {
  const auto p = shared_min_powers(2.0, 1.0, 0.1, 0.1, 1.0, 1.0, 1.0);
  REQUIRE(p.has_value());
  CHECK(p->cu_mw == doctest::Approx(2.1 / 1.99).epsilon(1e-12));
  CHECK(p->d2d_mw == doctest::Approx(1.1 / 1.99).epsilon(1e-12));
  const double sinr_cu = p->cu_mw * 1.0 / (1.0 + p->d2d_mw * 0.1);
  const double sinr_d2d = p->d2d_mw * 2.0 / (1.0 + p->cu_mw * 0.1);
  CHECK(sinr_cu == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sinr_d2d == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("shared minimum powers: singular and negative denominators") {
  CHECK_FALSE(shared_min_powers(1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0).has_value());
  CHECK_FALSE(shared_min_powers(1.0, 1.0, 2.0, 2.0, 1.0, 1.0, 1.0).has_value());
}

TEST_CASE("admissibility boundary is inclusive") {
  const double cap = 251.18864315095797;
  CHECK(is_admissible({1.0, 1.0}, cap, cap));
  CHECK_FALSE(is_admissible({300.0, 1.0}, cap, cap));
  CHECK_FALSE(is_admissible({1.0, 300.0}, cap, cap));
  CHECK(is_admissible({cap, cap}, cap, cap));
  CHECK_FALSE(is_admissible({0.0, 1.0}, cap, cap));
}

TEST_CASE("build_candidates: no pairs") {
  ScenarioConfig cfg;
  cfg.num_cus = 3;
  cfg.num_d2d_pairs = 0;
  ChannelRealization ch;
  ch.num_cus = 3;
  ch.num_pairs = 0;
  ch.g_cu_bs = {1e-6, 1e-6, 1e-6};
  SinrTargets targets;
  targets.cu_linear = {1.0, 2.0, 3.0};
  const auto cand = build_candidates(ch, targets, cfg);
  CHECK(cand.admissible_set.empty());
  CHECK(cand.cu_union.empty());
  CHECK(cand.p_min_exclusive_mw.size() == 3);
}

TEST_CASE("build_candidates: single feasible pair carries the hand-computed weight") {
  ScenarioConfig cfg;
  cfg.num_cus = 1;
  cfg.num_d2d_pairs = 1;
  cfg.noise_power_mw = 1.0;
  cfg.p_max_cu_mw = 251.18864315095797;
  cfg.p_max_d2d_mw = 251.18864315095797;
  const auto ch = single_link_channel(1.0, 2.0, 0.1, 0.1);
  SinrTargets targets{{1.0}, {1.0}};

  const auto cand = build_candidates(ch, targets, cfg);
  REQUIRE(cand.admissible_set == std::vector<int>{0});
  REQUIRE(cand.cu_union == std::vector<int>{0});
  REQUIRE(cand.candidates[0].size() == 1);
  CHECK(cand.p_min_exclusive_mw[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cand.candidates[0][0].p_inc_mw ==
        doctest::Approx((2.1 + 1.1) / 1.99 - 1.0).epsilon(1e-9));
  CHECK(cand.candidates[0][0].p_inc_mw == doctest::Approx(0.60804).epsilon(1e-4));
}

TEST_CASE("build_candidates: universal infeasibility leaves the set empty") {
  ScenarioConfig cfg;
  cfg.num_cus = 2;
  cfg.num_d2d_pairs = 2;
  cfg.noise_power_mw = 1.0;
  ChannelRealization ch;
  ch.num_cus = 2;
  ch.num_pairs = 2;
  ch.g_cu_bs = {1.0, 1.0};
  ch.g_d2d = {1.0, 1.0};
  ch.h_d2d_bs = {100.0, 100.0};
  ch.h_cu_d2d = {100.0, 100.0, 100.0, 100.0};
  SinrTargets targets{{316.0, 316.0}, {316.0, 316.0}};
  const auto cand = build_candidates(ch, targets, cfg);
  CHECK(cand.admissible_set.empty());
  CHECK(cand.cu_union.empty());
}

TEST_CASE("equality, minimality and dominance on random feasible instances") {
  RandomStream rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto in = oracle::random_feasible_instance(rng);
    const auto p = shared_min_powers(in.g_d2d, in.g_cu_bs, in.h_cu_d2d,
                                     in.h_d2d_bs, in.xi_cu, in.xi_d2d, in.noise_mw);
    REQUIRE(p.has_value());

    const double sinr_cu =
        p->cu_mw * in.g_cu_bs / (in.noise_mw + p->d2d_mw * in.h_d2d_bs);
    const double sinr_d2d =
        p->d2d_mw * in.g_d2d / (in.noise_mw + p->cu_mw * in.h_cu_d2d);
    CHECK(std::abs(sinr_cu - in.xi_cu) <= 1e-9 * in.xi_cu);
    CHECK(std::abs(sinr_d2d - in.xi_d2d) <= 1e-9 * in.xi_d2d);

    // Shrinking either power breaks at least one constraint.
    CHECK_FALSE(oracle::sharing_feasible_at(in, p->cu_mw * 0.999, p->d2d_mw));
    CHECK_FALSE(oracle::sharing_feasible_at(in, p->cu_mw, p->d2d_mw * 0.999));

    // Sharing never undercuts the exclusive minimum.
    const double p_min = min_power_exclusive(in.xi_cu, in.g_cu_bs, in.noise_mw);
    CHECK(p->cu_mw >= p_min * (1.0 - 1e-12));
    CHECK((p->cu_mw + p->d2d_mw) - p_min > 0.0);
  }
}

TEST_CASE("grid-search oracle finds nothing cheaper than the closed form") {
  RandomStream rng(55);
  for (int trial = 0; trial < 20; ++trial) {
    const auto in = oracle::random_feasible_instance(rng);
    const auto p = shared_min_powers(in.g_d2d, in.g_cu_bs, in.h_cu_d2d,
                                     in.h_d2d_bs, in.xi_cu, in.xi_d2d, in.noise_mw);
    REQUIRE(p.has_value());
    const double closed_sum = p->cu_mw + p->d2d_mw;
    const double step =
        std::max(in.p_max_cu_mw, in.p_max_d2d_mw) / 1000.0;

    const auto grid = oracle::grid_min_sum_full(in, 1000);
    if (grid.has_value()) {
      CHECK(*grid >= closed_sum - step);
    }
    // The collapsed scan is the same search, column by column.
    const auto collapsed = oracle::grid_min_sum_collapsed(in, 1000);
    CHECK(grid.has_value() == collapsed.has_value());
    if (grid && collapsed) {
      CHECK(*grid == doctest::Approx(*collapsed).epsilon(1e-12));
    }
  }
}

}  // TEST_SUITE
