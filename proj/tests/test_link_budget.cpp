#include <doctest.h>

#include <cmath>
#include <random>

#include "tomoswarm/link_budget.hpp"

using namespace tomoswarm;

TEST_CASE("radar constant") {
  const auto c = default_config();
  // 0.1 * 0.2 * 10 * 10^0.5 * 10^0.5 * 0.12^2 / ((4 pi)^3 k 400 3e9 10^0.5 10^0.6)
  const double num = 0.1 * 0.2 * 10.0 * std::pow(10.0, 0.5) * std::pow(10.0, 0.5) * 0.0144;
  const double den = std::pow(4.0 * M_PI, 3) * 1.380649e-23 * 400.0 * 3e9 * std::pow(10.0, 0.5) *
                     std::pow(10.0, 0.6);
  CHECK(radar_alpha(c, 0.2) == doctest::Approx(num / den).epsilon(1e-12));
  CHECK(radar_alpha(c, 0.2) == doctest::Approx(6.96e4).epsilon(1e-3));
  CHECK(radar_snr_pair(10.0, 20.0, 4e4) == doctest::Approx(1.0));
}

TEST_CASE("snr table is symmetric") {
  const auto c = default_config();
  const Formation f({{-20.0, 40.0}, {-10.0, 50.0}, {0.0, 20.0}});
  const auto t = radar_snr_table(f, c, 1e5);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(t.at(i, j) == t.at(j, i));
  const double r0 = slant_range(f[0], c.target_x);
  CHECK(t.at(0, 0) == doctest::Approx(1e5 / std::pow(r0, 4)));
}

TEST_CASE("minimum power meets the rate exactly") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ud(5.0, 600.0);
  std::uniform_real_distribution<double> ur(1e5, 5e7);
  std::uniform_real_distribution<double> ub(1e6, 5e9);
  std::uniform_real_distribution<double> ubeta(-10.0, 40.0);
  for (int i = 0; i < 200; ++i) {
    const double d = ud(rng);
    const double r = ur(rng);
    const double b = ub(rng);
    const double beta = std::pow(10.0, ubeta(rng) / 10.0);
    const double eta = min_offload_power(d, b, beta, r);
    CHECK(std::abs(comm_throughput(eta, d, b, beta) - r) <= 1e-9 * r);
  }
  CHECK(min_offload_power(10.0, 1e9, 100.0, 0.0) == 0.0);
}

TEST_CASE("allocation matches per-slot minimum powers") {
  const auto c = default_config();
  const auto t = MissionTimeline::from_config(c);
  const Formation f({{-60.0, 40.0}, {-50.0, 45.0}});
  auto cc = c;
  cc.num_uavs = 2;
  broadcast_per_uav(cc);
  const auto a = allocate_min_power(f, t, cc);
  REQUIRE(a.eta.size() == 400);
  for (int i = 0; i < 2; ++i) {
    double sum = 0.0;
    for (int k = 0; k < 200; ++k) {
      const double d = gs_distance(f[static_cast<std::size_t>(i)], t.y[static_cast<std::size_t>(k)],
                                   c.gs_position);
      CHECK(a.at(i, k) == doctest::Approx(min_offload_power(d, 1e9, 100.0, 6e6)).epsilon(1e-12));
      sum += a.at(i, k);
    }
    CHECK(a.energy[static_cast<std::size_t>(i)] == doctest::Approx(sum));
  }
}

TEST_CASE("allocation violations") {
  auto c = default_config();
  c.num_uavs = 2;
  broadcast_per_uav(c);
  const auto t = MissionTimeline::from_config(c);
  const Formation near({{-85.0, 25.0}, {-80.0, 25.0}});
  CHECK(allocate_min_power(near, t, c).feasible);
  c.comm.e_max = 1.0;
  const auto tight = allocate_min_power(near, t, c);
  CHECK_FALSE(tight.feasible);
  CHECK(tight.c12_violation > 0.0);
  c.comm.e_max = 570.0;
  c.comm.r_min = 5e7;
  const auto fast = allocate_min_power(near, t, c);
  CHECK(fast.c11_violation > 0.0);
}

TEST_CASE("explicit powers are checked term by term") {
  auto c = default_config();
  c.num_uavs = 2;
  c.num_slots = 3;
  broadcast_per_uav(c);
  const auto t = MissionTimeline::from_config(c);
  const Formation f({{-85.0, 25.0}, {-70.0, 25.0}});
  const auto a = allocate_min_power(f, t, c);
  const auto ok = evaluate_power_constraints(f, t, c, a.eta);
  CHECK(ok.feasible());
  auto powers = a.eta;
  powers[0] = -1.0;
  powers[1] = 12.0;
  const auto bad = evaluate_power_constraints(f, t, c, powers);
  CHECK(bad.g8 == doctest::Approx(1.0 + 2.0));
  CHECK(bad.g9 > 0.0);
  CHECK_THROWS(evaluate_power_constraints(f, t, c, std::vector<double>(5, 0.0)));
}
