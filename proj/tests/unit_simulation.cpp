// Copyright 2026 The dsskit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <random>

#include <doctest.h>

#include "dsskit/bva.hpp"
#include "dsskit/errors.hpp"
#include "dsskit/kinematics.hpp"
#include "dsskit/simulation.hpp"
#include "support/oracles.hpp"

using namespace dsskit;
using namespace dsskit::sim;

namespace
{

const EnvConstants kEnv{9.81, 0.9, 5.0};
const SimConfig kSim{0.01, 60.0};

// nominal on the DSS = 0 surface, offset by the requested DSS
RelativeScenario scenario_with_dss(double target_dss)
{
  const double decel = max_braking_decel(kEnv);
  const double v_lead = 27.7778;
  const double v_follow = 33.3334;
  const double gap =
    dsskit_test::boundary_effective_distance(v_lead, v_follow, 0.7, decel) + target_dss;
  return {gap, v_lead - v_follow, 0.7, v_lead};
}

double uniform(std::mt19937_64 & rng, double lo, double hi)
{
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

}  // namespace

TEST_CASE("sim config validation")
{
  CHECK_THROWS_AS(validate(SimConfig{0.0, 60.0}), DomainError);
  CHECK_THROWS_AS(validate(SimConfig{0.2, 60.0}), DomainError);
  CHECK_THROWS_AS(validate(SimConfig{0.01, 0.0}), DomainError);
  CHECK_NOTHROW(validate(kSim));
}

TEST_CASE("simulation of the boundary-adjacent cases")
{
  SUBCASE("NSC case stops one centimetre short")
  {
    const auto outcome = simulate(to_absolute(scenario_with_dss(0.01), kEnv, 0.0), kEnv, kSim);
    CHECK_FALSE(outcome.collided);
    CHECK_FALSE(outcome.collision_time.has_value());
    CHECK(outcome.min_gap == doctest::Approx(0.01).scale(1.0).epsilon(2e-3));
    CHECK(std::abs(outcome.final_gap - 0.01) <= 1e-9);
  }

  SUBCASE("SC case collides")
  {
    const auto outcome = simulate(to_absolute(scenario_with_dss(-0.01), kEnv, 0.0), kEnv, kSim);
    CHECK(outcome.collided);
    REQUIRE(outcome.collision_time.has_value());
    CHECK(*outcome.collision_time > 0.0);
    CHECK(*outcome.collision_time <= outcome.stop_time);
    CHECK(outcome.min_gap < 0.0);
  }

  SUBCASE("comfortably safe scenario keeps a final gap equal to DSS")
  {
    const auto outcome = simulate(to_absolute(scenario_with_dss(5.0), kEnv, 0.0), kEnv, kSim);
    CHECK_FALSE(outcome.collided);
    CHECK(std::abs(outcome.final_gap - 5.0) <= 1e-9);
  }
}

TEST_CASE("static vehicles never move")
{
  const auto outcome = simulate({20.0, 5.0, 0.0, 0.0, 1.0}, kEnv, kSim);
  CHECK_FALSE(outcome.collided);
  CHECK(outcome.min_gap == 10.0);
  CHECK(outcome.final_gap == 10.0);
  CHECK(outcome.stop_time == 0.0);
}

TEST_CASE("trajectory kinematics")
{
  const auto scenario = to_absolute(scenario_with_dss(0.5), kEnv, 0.0);
  const auto outcome = simulate(scenario, kEnv, kSim, true);
  REQUIRE(!outcome.trajectory.empty());

  const double decel = max_braking_decel(kEnv);
  double previous_x_lead = scenario.lead_position;
  double previous_x_follow = scenario.follow_position;
  double previous_v_follow = scenario.follow_speed;
  bool follower_stopped = false;
  for (const auto & p : outcome.trajectory) {
    REQUIRE(p.v_lead >= 0.0);
    REQUIRE(p.v_follow >= 0.0);
    REQUIRE(p.x_lead >= previous_x_lead - 1e-12);       // positions nondecreasing
    REQUIRE(p.x_follow >= previous_x_follow - 1e-12);
    if (!follower_stopped && p.v_follow == 0.0) {
      follower_stopped = true;
    }
    if (!follower_stopped && p.t > scenario.reaction_time) {
      REQUIRE(p.v_follow <= previous_v_follow + 1e-12);  // braking phase decelerates
    }
    previous_x_lead = p.x_lead;
    previous_x_follow = p.x_follow;
    previous_v_follow = p.v_follow;
  }

  // total braking travel of each vehicle is v0^2 / (2 a)
  const auto & last = outcome.trajectory.back();
  CHECK(
    std::abs(
      (last.x_lead - scenario.lead_position) -
      scenario.lead_speed * scenario.lead_speed / (2.0 * decel)) <= 1e-9);
  const double follow_travel = scenario.follow_speed * scenario.reaction_time +
    scenario.follow_speed * scenario.follow_speed / (2.0 * decel);
  CHECK(std::abs((last.x_follow - scenario.follow_position) - follow_travel) <= 1e-9);

  // sampling density follows dt
  CHECK(outcome.trajectory[1].t == doctest::Approx(kSim.dt));
}

TEST_CASE("dt only affects sampling, never the outcome")
{
  std::mt19937_64 rng(0x5eed0201);
  for (int i = 0; i < 200; ++i) {
    RelativeScenario r;
    r.lead_speed = uniform(rng, 0.0, 40.0);
    r.speed_delta = r.lead_speed - uniform(rng, 0.0, 45.0);
    r.effective_distance = uniform(rng, 0.0, 120.0);
    r.reaction_time = uniform(rng, 0.0, 2.0);
    const auto abs_scenario = to_absolute(r, kEnv, 0.0);

    const auto coarse = simulate(abs_scenario, kEnv, {0.08, 60.0});
    const auto fine = simulate(abs_scenario, kEnv, {0.04, 60.0});
    REQUIRE(coarse.collided == fine.collided);
    REQUIRE(coarse.min_gap == fine.min_gap);
    REQUIRE(coarse.final_gap == fine.final_gap);
  }
}

TEST_CASE("min gap is the smaller of initial gap and DSS under this maneuver")
{
  // equal decelerations make the relative speed piecewise monotone, so the
  // gap has no strict interior minimum
  std::mt19937_64 rng(0x5eed0202);
  for (int i = 0; i < 500; ++i) {
    RelativeScenario r;
    r.lead_speed = uniform(rng, 0.0, 40.0);
    r.speed_delta = r.lead_speed - uniform(rng, 0.0, 45.0);
    r.effective_distance = uniform(rng, 0.0, 120.0);
    r.reaction_time = uniform(rng, 0.0, 2.0);

    const double dss = dss_relative(r, kEnv).dss;
    const auto outcome = simulate(to_absolute(r, kEnv, 0.0), kEnv, kSim);
    REQUIRE(
      outcome.min_gap ==
      doctest::Approx(std::min(r.effective_distance, dss)).scale(1.0).epsilon(1e-9));
    REQUIRE(outcome.collided == (outcome.min_gap < 0.0));
    REQUIRE(outcome.collision_time.has_value() == outcome.collided);
  }
}

TEST_CASE("oracle agreement on randomized scenarios")
{
  std::mt19937_64 rng(0x5eed0203);
  int compared = 0;
  for (int i = 0; i < 1000; ++i) {
    RelativeScenario r;
    r.lead_speed = uniform(rng, 0.0, 40.0);
    r.speed_delta = -uniform(rng, 0.1, 15.0);  // follower faster than leader
    r.effective_distance = uniform(rng, 0.0, 150.0);
    r.reaction_time = uniform(rng, 0.0, 2.0);

    const auto record = oracle_check(r, kEnv, kSim);
    REQUIRE(record.agree);
    if (!record.excluded) {
      ++compared;
      REQUIRE(record.gap_error <= 1e-6);
    }
  }
  CHECK(compared > 900);  // dead band only swallows a narrow strip
}

TEST_CASE("oracle dead band")
{
  const auto excluded = oracle_check(scenario_with_dss(0.01), kEnv, kSim, 0.05);
  CHECK(excluded.excluded);
  CHECK(excluded.agree);

  const auto compared = oracle_check(scenario_with_dss(0.01), kEnv, kSim, 0.0);
  CHECK_FALSE(compared.excluded);
  CHECK(compared.agree);

  CHECK_THROWS_AS(oracle_check(scenario_with_dss(1.0), kEnv, kSim, -0.1), DomainError);
}

TEST_CASE("maneuver sign samples for coverage accounting")
{
  SUBCASE("follower brakes while the leader is still braking")
  {
    // v_F > v_L > 0 and t_BR < T_L < T_F: reaction phase, overlap phase and
    // the leader-standstill instant give three relevant combinations
    const auto samples = maneuver_sign_samples({50.0, -5.0, 0.7, 20.0}, kEnv);
    const auto report = relevance::coverage_report(samples);
    CHECK(report.covered() == 3);
    CHECK(report.hits[3] == 1);  // v_L > 0, a_F = 0 (reaction phase)
    CHECK(report.hits[2] == 1);  // v_L > 0, a_F < 0 (both braking)
    CHECK(report.hits[0] == 1);  // v_L = 0, a_F < 0 (leader reaches standstill)
  }

  SUBCASE("leader stops during the reaction phase")
  {
    // T_L < t_BR: the standstill falls into the constant-speed phase
    const auto samples = maneuver_sign_samples({30.0, -18.0, 2.0, 2.0}, kEnv);
    const auto report = relevance::coverage_report(samples);
    CHECK(report.hits[1] == 1);  // v_L = 0, a_F = 0
    CHECK(report.hits[3] == 1);  // v_L > 0, a_F = 0
  }

  SUBCASE("parked leader never contributes a braking leader")
  {
    const auto samples = maneuver_sign_samples({30.0, -15.0, 0.7, 0.0}, kEnv);
    CHECK(relevance::coverage_report(samples).covered() == 0);
  }
}

TEST_CASE("scenario validation passes through")
{
  CHECK_THROWS_AS(simulate({4.0, 0.0, 10.0, 10.0, 0.5}, kEnv, kSim), DomainError);
  CHECK_THROWS_AS(simulate({50.0, 0.0, -1.0, 10.0, 0.5}, kEnv, kSim), DomainError);
}
